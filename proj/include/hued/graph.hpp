#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hued {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are strictly increasing, symmetric and loop-free. All
/// construction goes through from_edges(), which rejects self-loops,
/// duplicate edges and out-of-range endpoints with InputError.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
    static Graph edgeless(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const noexcept { return max_degree_; }
    bool has_edge(Vertex u, Vertex v) const;

    // Each edge once as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
};

struct Bipartition {
    std::vector<Vertex> side0;
    std::vector<Vertex> side1;
};

// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

// BFS two-colouring. Every component puts its lowest-index vertex on side 0.
std::optional<Bipartition> bipartition(const Graph& g);

// Same vertices, with an edge between every pair at distance 1 or 2.
Graph square(const Graph& g);

} // namespace hued
