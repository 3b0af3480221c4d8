#include "hued/coloring.hpp"

#include <algorithm>

#include "hued/errors.hpp"

namespace hued {
namespace {

void require_matching_size(const Graph& g, const PartialColoring& phi) {
    if (phi.vertex_count() != g.vertex_count()) {
        throw InputError("colouring has " + std::to_string(phi.vertex_count()) + " entries but graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
}

std::size_t count_distinct(std::vector<Color>& colors) {
    std::sort(colors.begin(), colors.end());
    return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

} // namespace

PartialColoring::PartialColoring(std::size_t vertex_count, Color palette_size)
    : colors_(vertex_count, 0), palette_size_(palette_size) {
    if (palette_size == 0) throw InputError("palette size must be positive");
}

PartialColoring PartialColoring::from_values(std::span<const Color> values, Color palette_size) {
    PartialColoring phi(values.size(), palette_size);
    for (Vertex v = 0; v < values.size(); ++v) {
        if (values[v] != 0) phi.assign(v, values[v]);
    }
    return phi;
}

std::optional<Color> PartialColoring::color(Vertex v) const {
    const Color c = colors_.at(v);
    if (c == 0) return std::nullopt;
    return c;
}

void PartialColoring::assign(Vertex v, Color c) {
    if (c < 1 || c > palette_size_) {
        throw InputError("colour " + std::to_string(c) + " outside palette [1, " + std::to_string(palette_size_) +
                         "]");
    }
    colors_.at(v) = c;
}

bool PartialColoring::is_total() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == 0; });
}

std::size_t PartialColoring::colored_count() const {
    return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != 0; }));
}

std::vector<Color> PartialColoring::used_color_set() const {
    std::vector<Color> used;
    for (Color c : colors_) {
        if (c != 0) used.push_back(c);
    }
    used.resize(count_distinct(used));
    return used;
}

std::size_t PartialColoring::colors_used() const {
    return used_color_set().size();
}

std::size_t distinct_neighbor_colors(const Graph& g, const PartialColoring& phi, Vertex v) {
    std::vector<Color> seen;
    for (Vertex x : g.neighbors(v)) {
        if (phi.is_colored(x)) seen.push_back(phi.value(x));
    }
    return count_distinct(seen);
}

bool is_proper(const Graph& g, const PartialColoring& phi) {
    require_matching_size(g, phi);
    for (const auto& [u, v] : g.edges()) {
        if (phi.is_colored(u) && phi.value(u) == phi.value(v)) return false;
    }
    return true;
}

bool is_partial_r_hued(const Graph& g, const PartialColoring& phi, std::size_t r) {
    if (!is_proper(g, phi)) return false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::size_t colored = 0;
        for (Vertex x : g.neighbors(u)) colored += phi.is_colored(x) ? 1 : 0;
        if (distinct_neighbor_colors(g, phi, u) < std::min(r, colored)) return false;
    }
    return true;
}

std::optional<std::string> r_hued_violation(const Graph& g, const PartialColoring& phi, std::size_t r) {
    require_matching_size(g, phi);
    if (!phi.is_total()) throw InputError("r-hued check needs a total colouring; use the partial check instead");
    for (const auto& [u, v] : g.edges()) {
        if (phi.value(u) == phi.value(v)) {
            return "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is monochromatic with colour " +
                   std::to_string(phi.value(u));
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::size_t need = std::min(r, g.degree(v));
        const std::size_t have = distinct_neighbor_colors(g, phi, v);
        if (have < need) {
            return "vertex " + std::to_string(v) + " sees " + std::to_string(have) + " neighbour colours, needs " +
                   std::to_string(need);
        }
    }
    return std::nullopt;
}

bool is_r_hued(const Graph& g, const PartialColoring& phi, std::size_t r) {
    return !r_hued_violation(g, phi, r).has_value();
}

bool rainbow_invariant_holds(const Graph& g, const PartialColoring& phi, std::size_t r) {
    require_matching_size(g, phi);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::vector<Color> seen;
        for (Vertex x : g.neighbors(u)) {
            if (phi.is_colored(x)) seen.push_back(phi.value(x));
        }
        const std::size_t colored = seen.size();
        if (colored <= r && count_distinct(seen) != colored) return false;
    }
    return true;
}

NeighborSplit weak_strong_split(const Graph& g, const PartialColoring& phi, std::size_t r, Vertex v) {
    require_matching_size(g, phi);
    NeighborSplit split;
    for (Vertex x : g.neighbors(v)) {
        (distinct_neighbor_colors(g, phi, x) >= r ? split.strong : split.weak).push_back(x);
    }
    return split;
}

} // namespace hued
