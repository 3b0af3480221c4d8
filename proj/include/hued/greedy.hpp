#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hued/coloring.hpp"
#include "hued/graph.hpp"

namespace hued {

#ifdef NDEBUG
inline constexpr bool kDebugChecks = false;
#else
inline constexpr bool kDebugChecks = true;
#endif

enum class VertexOrder {
    Index,  // ascending vertex index
    Random, // seeded uniform permutation
};

struct GreedyOptions {
    std::size_t r = 2;
    VertexOrder order = VertexOrder::Index;
    std::uint64_t seed = 0;
    // Assert the partial r-hued condition, the rainbow invariant and the
    // forbidden-set bounds at every step boundary. Throws InvariantError.
    bool check_invariants = kDebugChecks;
    bool record_log = false;
};

enum class StepCase : std::uint8_t {
    FirstFit = 0, // r' <= 1: plain proper colouring
    FewWeak = 1,  // |W(v)| <= r' - 1, colour v alone
    ManyWeak = 2, // |W(v)| >= r', recolour v and all of W(v)
};

struct StepRecord {
    Vertex vertex;
    StepCase step_case;
    std::size_t forbidden; // forbidden-set size when colouring `vertex`
    // ManyWeak only: (w_j, forbidden-set size) in the order coloured.
    std::vector<std::pair<Vertex, std::size_t>> weak_recolored;
};

struct GreedyResult {
    PartialColoring coloring;
    std::size_t effective_r; // r' = min(r, Delta)
    Color bound;             // palette size B
    std::vector<StepRecord> log;
};

// Palette size B the greedy colouring is guaranteed to fit:
// Delta + 1 when r' <= 1, otherwise (r' - 1)(Delta + 1) + 2.
Color greedy_palette_bound(std::size_t max_degree, std::size_t r);

// Total r-hued colouring with colours from {1..B}.
GreedyResult greedy_r_hued(const Graph& g, const GreedyOptions& options);

} // namespace hued
