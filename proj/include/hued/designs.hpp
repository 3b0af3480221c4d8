#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hued/graph.hpp"

namespace hued {

using Block = std::vector<Vertex>;

/// Candidate Steiner system S(2, r, n): points 0..n-1 and r-element blocks.
/// Generators return canonical form (each block sorted, blocks sorted).
struct SteinerSystem {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<Block> blocks;

    // k = (n - 1) / (r - 1), meaningful only for a verified system.
    std::size_t replication() const { return r > 1 ? (n - 1) / (r - 1) : 0; }
    void canonicalize();

    friend bool operator==(const SteinerSystem&, const SteinerSystem&) = default;
};

struct DesignReport {
    bool ok = true;
    std::string failure; // first violated condition, empty when ok
};

// Block shape, exact pair coverage and the counting conditions
// n - 1 = k(r - 1), nk = br.
DesignReport verify_steiner(const SteinerSystem& s);

// S(2, 2, n): every pair is a block. n >= 2.
SteinerSystem pairs_system(std::size_t n);

// S(2, 3, n) for n = 6t + 3 >= 9 (Bose).
SteinerSystem bose_triple_system(std::size_t n);

// S(2, 3, n) for n = 6t + 1 >= 7 (Skolem).
SteinerSystem skolem_triple_system(std::size_t n);

// S(2, q + 1, q^2 + q + 1) and S(2, q, q^2) over GF(q).
SteinerSystem projective_plane(std::uint32_t q);
SteinerSystem affine_plane(std::uint32_t q);

struct BruteForceResult {
    std::optional<SteinerSystem> system;
    bool budget_exceeded = false; // result indeterminate when set
    std::uint64_t nodes = 0;
};

// Backtracking over blocks covering the lexicographically first uncovered
// pair. Returns the first system found, or none after full exhaustion.
BruteForceResult brute_force_steiner(std::size_t n, std::size_t r, std::uint64_t node_limit = 50'000'000,
                                     std::size_t max_points = 15);

/// Incidence graph of a Steiner system. Vertices 0..n-1 are points and
/// n..n+b-1 are blocks in the system's block order.
struct LeviGraph {
    Graph graph;
    SteinerSystem system;

    std::size_t point_count() const { return system.n; }
    std::size_t block_count() const { return system.blocks.size(); }
    bool is_point(Vertex v) const { return v < system.n; }
    Vertex block_vertex(std::size_t i) const { return static_cast<Vertex>(system.n + i); }
};

// Throws InputError if s does not verify.
LeviGraph levi_graph(const SteinerSystem& s);

// Rebuild the system from a points-first incidence graph. Throws InputError
// if the graph is not the Levi graph of a verifying S(2, r, point_count).
LeviGraph levi_from_graph(const Graph& g, std::size_t point_count);

} // namespace hued
