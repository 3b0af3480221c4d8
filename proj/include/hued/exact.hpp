#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hued/coloring.hpp"
#include "hued/graph.hpp"

namespace hued {

struct ExactBudget {
    std::size_t max_vertices = 40;
    std::uint64_t node_limit = 0;  // 0 = unlimited
    std::uint64_t timeout_ms = 0;  // 0 = unlimited
    std::optional<Color> max_colors; // stop searching above this many colours
};

struct ExactResult {
    // Exact chi_r when !timed_out; otherwise the size of a verified colouring.
    // 0 when max_colors was reached without finding a colouring.
    Color chi_r = 0;
    PartialColoring witness{0, 1};
    std::uint64_t nodes_explored = 0;
    bool timed_out = false;
    bool exhausted_max_colors = false;
};

// max(1, max over v of min(r, deg v) + 1); 1 for the empty graph.
Color hued_lower_bound(const Graph& g, std::size_t r);

// Smallest k admitting an r-hued k-colouring, by depth-first search with
// properness, hue-feasibility and colour-symmetry pruning. Throws InputError
// above budget.max_vertices or for r == 0.
ExactResult exact_chi_r(const Graph& g, std::size_t r, const ExactBudget& budget = {});

// Decide whether an r-hued colouring with at most k colours exists.
// nullopt if the budget ran out first.
struct KProbe {
    std::optional<bool> feasible;
    PartialColoring witness{0, 1};
    std::uint64_t nodes = 0;
};
KProbe probe_k_colors(const Graph& g, std::size_t r, Color k, const ExactBudget& budget = {});

} // namespace hued
