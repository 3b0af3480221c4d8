#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

Adjacency adjacency_matrix(const hued::Graph& g) {
    const std::size_t n = g.vertex_count();
    Adjacency adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    return adj;
}

bool hued_by_definition(const Adjacency& adj, const std::vector<int>& colors, std::size_t r) {
    const std::size_t n = adj.size();
    for (std::size_t v = 0; v < n; ++v) {
        std::set<int> seen;
        std::size_t deg = 0;
        for (std::size_t u = 0; u < n; ++u) {
            if (!adj[v][u]) continue;
            if (colors[u] == colors[v]) return false;
            seen.insert(colors[u]);
            ++deg;
        }
        if (seen.size() < std::min(r, deg)) return false;
    }
    return true;
}

std::size_t chi_r_by_partitions(const hued::Graph& g, std::size_t r) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    const Adjacency adj = adjacency_matrix(g);
    std::vector<int> rgs(n, 0);
    std::size_t best = n;
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int top) {
        if (i == n) {
            std::vector<int> colors(n);
            for (std::size_t v = 0; v < n; ++v) colors[v] = rgs[v] + 1;
            if (hued_by_definition(adj, colors, r)) best = std::min(best, static_cast<std::size_t>(top + 1));
            return;
        }
        for (int c = 0; c <= top + 1; ++c) {
            rgs[i] = c;
            walk(i + 1, std::max(top, c));
        }
    };
    rgs[0] = 0;
    walk(1, 0);
    return best;
}

std::size_t chi_r_by_assignments(const hued::Graph& g, std::size_t r) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    const Adjacency adj = adjacency_matrix(g);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<int> colors(n, 1);
        while (true) {
            if (hued_by_definition(adj, colors, r)) return k;
            std::size_t i = 0;
            while (i < n && colors[i] == static_cast<int>(k)) colors[i++] = 1;
            if (i == n) break;
            ++colors[i];
        }
    }
    return n;
}

hued::Graph square_by_matrix(const hued::Graph& g) {
    const std::size_t n = g.vertex_count();
    const Adjacency adj = adjacency_matrix(g);
    std::vector<hued::Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            bool close = adj[u][v];
            for (std::size_t w = 0; w < n && !close; ++w) close = adj[u][w] && adj[w][v];
            if (close) edges.emplace_back(static_cast<hued::Vertex>(u), static_cast<hued::Vertex>(v));
        }
    }
    return hued::Graph::from_edges(n, edges);
}

std::optional<std::size_t> girth_by_cycles(const hued::Graph& g) {
    const std::size_t n = g.vertex_count();
    const Adjacency adj = adjacency_matrix(g);
    std::optional<std::size_t> best;
    std::vector<bool> on_path(n, false);
    // Each cycle is found from its smallest vertex s, using only vertices > s.
    std::function<void(std::size_t, std::size_t, std::size_t)> extend = [&](std::size_t s, std::size_t v,
                                                                             std::size_t len) {
        for (std::size_t u = 0; u < n; ++u) {
            if (!adj[v][u]) continue;
            if (u == s && len >= 3) {
                if (!best || len < *best) best = len;
            } else if (u > s && !on_path[u]) {
                on_path[u] = true;
                extend(s, u, len + 1);
                on_path[u] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        on_path[s] = true;
        extend(s, s, 1);
        on_path[s] = false;
    }
    return best;
}

namespace {

using Code = std::uint32_t;

std::size_t pair_bit(std::size_t i, std::size_t j) {
    // i < j; pairs (0,1),(0,2),(1,2),(0,3),... so codes nest across n.
    return j * (j - 1) / 2 + i;
}

std::vector<std::uint8_t> decode(Code code, std::size_t n) {
    std::vector<std::uint8_t> rows(n, 0);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (code >> pair_bit(i, j) & 1) {
                rows[i] |= static_cast<std::uint8_t>(1u << j);
                rows[j] |= static_cast<std::uint8_t>(1u << i);
            }
        }
    }
    return rows;
}

// Smallest code over all relabellings that list vertices by non-increasing
// degree. Isomorphic graphs share the same candidate set, so it is canonical.
Code canonical(const std::vector<std::uint8_t>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto deg = [&](std::size_t v) { return __builtin_popcount(rows[v]); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg(a) > deg(b); });
    std::vector<std::pair<std::size_t, std::size_t>> groups; // [begin, end)
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && deg(order[j]) == deg(order[i])) ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    Code best = ~Code{0};
    std::function<void(std::size_t)> permute = [&](std::size_t gi) {
        if (gi == groups.size()) {
            Code code = 0;
            for (std::size_t j = 1; j < n; ++j) {
                for (std::size_t i = 0; i < j; ++i) {
                    if (rows[order[i]] >> order[j] & 1) code |= Code{1} << pair_bit(i, j);
                }
            }
            best = std::min(best, code);
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(groups[gi].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(groups[gi].second);
        std::sort(first, last);
        do {
            permute(gi + 1);
        } while (std::next_permutation(first, last));
    };
    permute(0);
    return best;
}

hued::Graph to_graph(Code code, std::size_t n) {
    std::vector<hued::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (code >> pair_bit(i, j) & 1) edges.emplace_back(static_cast<hued::Vertex>(i), static_cast<hued::Vertex>(j));
        }
    }
    return hued::Graph::from_edges(n, edges);
}

} // namespace

std::vector<hued::Graph> all_graphs(std::size_t n) {
    std::set<Code> level{0}; // the graph on one vertex (or none)
    for (std::size_t m = 2; m <= n; ++m) {
        std::set<Code> next;
        for (Code code : level) {
            const auto base = decode(code, m - 1);
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                auto rows = base;
                rows.push_back(0);
                for (std::size_t i = 0; i + 1 < m; ++i) {
                    if (mask >> i & 1) {
                        rows[i] |= static_cast<std::uint8_t>(1u << (m - 1));
                        rows[m - 1] |= static_cast<std::uint8_t>(1u << i);
                    }
                }
                next.insert(canonical(rows));
            }
        }
        level = std::move(next);
    }
    std::vector<hued::Graph> out;
    for (Code code : level) out.push_back(to_graph(code, n));
    return out;
}

bool is_connected(const hued::Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<hued::Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const hued::Vertex v = stack.back();
        stack.pop_back();
        for (hued::Vertex u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

std::vector<hued::Graph> connected_graphs(std::size_t n) {
    std::vector<hued::Graph> out;
    for (auto& g : all_graphs(n)) {
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

} // namespace oracle
