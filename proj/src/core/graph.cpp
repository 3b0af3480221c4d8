#include "hued/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "hued/errors.hpp"

namespace hued {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    if (vertex_count > std::numeric_limits<Vertex>::max()) {
        throw InputError("vertex count exceeds index range");
    }
    Graph g;
    g.adjacency_.resize(vertex_count);
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
        }
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        if (auto dup = std::adjacent_find(adj.begin(), adj.end()); dup != adj.end()) {
            throw InputError("duplicate edge (" + std::to_string(std::min<std::size_t>(v, *dup)) + ", " +
                             std::to_string(std::max<std::size_t>(v, *dup)) + ")");
        }
        g.max_degree_ = std::max(g.max_degree_, adj.size());
    }
    g.edge_count_ = edges.size();
    return g;
}

Graph Graph::edgeless(std::size_t vertex_count) {
    return from_edges(vertex_count, {});
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v >= adjacency_.size()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const {
    return neighbors(v).size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto adj = neighbors(u);
    (void)neighbors(v);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::optional<std::size_t> girth(const Graph& g) {
    // BFS from every root; a non-tree edge (x, y) closes a cycle of length
    // at most dist[x] + dist[y] + 1, and the minimum over all roots is exact.
    const std::size_t n = g.vertex_count();
    constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = kUnseen;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    std::queue<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[root] = 0;
        parent[root] = root;
        queue.push(root);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop();
            if (2 * dist[x] >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == kUnseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        queue = {};
    }
    if (best == kUnseen) return std::nullopt;
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::queue<Vertex> queue;
    for (Vertex start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    queue.push(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < n; ++v) {
        (side[v] == 0 ? parts.side0 : parts.side1).push_back(v);
    }
    return parts;
}

Graph square(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::vector<Vertex> reach;
        for (Vertex x : g.neighbors(u)) {
            reach.push_back(x);
            for (Vertex y : g.neighbors(x)) reach.push_back(y);
        }
        std::sort(reach.begin(), reach.end());
        reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
        for (Vertex v : reach) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

} // namespace hued
