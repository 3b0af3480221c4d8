#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hued/graph.hpp"

namespace hued {

using Color = std::uint32_t;

/// Partial map from vertices to colours 1..palette_size.
///
/// Unassigned vertices are represented internally by 0; the public surface
/// exposes them as std::nullopt.
class PartialColoring {
public:
    PartialColoring(std::size_t vertex_count, Color palette_size);

    // From explicit values, 0 meaning unassigned. Throws InputError if a
    // colour exceeds palette_size.
    static PartialColoring from_values(std::span<const Color> values, Color palette_size);

    std::size_t vertex_count() const noexcept { return colors_.size(); }
    Color palette_size() const noexcept { return palette_size_; }

    bool is_colored(Vertex v) const { return colors_.at(v) != 0; }
    std::optional<Color> color(Vertex v) const;
    // Raw value, 0 when unassigned.
    Color value(Vertex v) const { return colors_.at(v); }
    std::span<const Color> values() const noexcept { return colors_; }

    void assign(Vertex v, Color c);
    void unassign(Vertex v) { colors_.at(v) = 0; }

    bool is_total() const;
    std::size_t colored_count() const;
    std::size_t colors_used() const;
    // Sorted distinct colours in use.
    std::vector<Color> used_color_set() const;

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    std::vector<Color> colors_;
    Color palette_size_;
};

// |phi(N(v))|: distinct colours on the coloured neighbours of v.
std::size_t distinct_neighbor_colors(const Graph& g, const PartialColoring& phi, Vertex v);

// Conditions i) and ii) of a partial r-hued colouring, and the full r-hued
// condition for total colourings.
bool is_proper(const Graph& g, const PartialColoring& phi);
bool is_partial_r_hued(const Graph& g, const PartialColoring& phi, std::size_t r);
bool is_r_hued(const Graph& g, const PartialColoring& phi, std::size_t r);

// First reason is_r_hued fails, or nullopt when valid. Same preconditions.
std::optional<std::string> r_hued_violation(const Graph& g, const PartialColoring& phi, std::size_t r);

// Every vertex with at most r coloured neighbours sees them pairwise distinct.
bool rainbow_invariant_holds(const Graph& g, const PartialColoring& phi, std::size_t r);

struct NeighborSplit {
    std::vector<Vertex> weak;   // |phi(N(x))| <= r - 1
    std::vector<Vertex> strong; // |phi(N(x))| >= r
};

NeighborSplit weak_strong_split(const Graph& g, const PartialColoring& phi, std::size_t r, Vertex v);

} // namespace hued
