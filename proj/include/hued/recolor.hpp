#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hued/coloring.hpp"
#include "hued/designs.hpp"

namespace hued {

struct RecolorStep {
    Vertex block_vertex;
    int case_tag;          // 1: some neighbour already sees r colours without y; 2: none does
    Color old_color;
    Color new_color;
    std::size_t forbidden; // |A| or |A*|
    std::size_t offending_after;
};

struct RecolorReport {
    std::size_t input_colors = 0;
    std::size_t output_colors = 0;
    bool guaranteed = false; // point degree >= r + 2
    bool success = true;     // false only in best-effort mode
    std::string failure;
    std::vector<RecolorStep> steps;
};

struct RecolorResult {
    PartialColoring coloring;
    RecolorReport report;
};

/// Recolour block vertices whose colour is not used on any point, until
/// every colour comes from the points' colour set. For the Levi graph of
/// S(2, r, (r-1)k + 1) with point degree k >= r + 2 this ends with exactly
/// n colours; below that bound it runs best-effort and may stop early with
/// report.success == false.
///
/// Throws InputError when phi is not a total r-hued colouring of lg.graph or
/// r differs from the block size, and InvariantError when a step breaks the
/// r-hued condition or the guaranteed case runs out of colours.
RecolorResult reduce_levi_coloring(const LeviGraph& lg, const PartialColoring& phi, std::size_t r);

} // namespace hued
