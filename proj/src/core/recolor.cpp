#include "hued/recolor.hpp"

#include <algorithm>
#include <set>

#include "hued/errors.hpp"

namespace hued {
namespace {

using ColorSet = std::set<Color>;

ColorSet colors_of(const PartialColoring& phi, std::span<const Vertex> vertices, Vertex skip) {
    ColorSet out;
    for (Vertex x : vertices) {
        if (x != skip) out.insert(phi.value(x));
    }
    return out;
}

} // namespace

RecolorResult reduce_levi_coloring(const LeviGraph& lg, const PartialColoring& input, std::size_t r) {
    const Graph& g = lg.graph;
    if (r != lg.system.r) {
        throw InputError("r = " + std::to_string(r) + " differs from block size " + std::to_string(lg.system.r));
    }
    if (input.vertex_count() != g.vertex_count() || !input.is_total()) {
        throw InputError("recolouring needs a total colouring of the Levi graph");
    }
    if (const auto why = r_hued_violation(g, input, r)) {
        throw InputError("input colouring is not " + std::to_string(r) + "-hued: " + *why);
    }

    const std::size_t n = lg.point_count();
    const std::size_t point_degree = lg.system.replication();

    ColorSet point_colors;
    for (Vertex p = 0; p < n; ++p) point_colors.insert(input.value(p));
    if (point_colors.size() != n) throw InvariantError("points of an r-hued Levi colouring share a colour");

    RecolorResult result{input, {}};
    RecolorReport& report = result.report;
    report.input_colors = input.colors_used();
    report.guaranteed = point_degree >= r + 2;
    PartialColoring& phi = result.coloring;

    auto offending = [&] {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < lg.block_count(); ++i) {
            const Vertex y = lg.block_vertex(i);
            if (!point_colors.contains(phi.value(y))) out.push_back(y);
        }
        return out;
    };

    std::vector<Vertex> pending = offending();
    while (!pending.empty()) {
        const Vertex y = pending.front();
        const auto around = g.neighbors(y);

        // z in N(y) already seeing r colours without y
        std::vector<Vertex> satisfied;
        for (Vertex z : around) {
            if (colors_of(phi, g.neighbors(z), y).size() >= r) satisfied.push_back(z);
        }

        ColorSet forbidden;
        int case_tag = 0;
        std::size_t limit = 0;
        if (!satisfied.empty()) {
            case_tag = 1;
            for (Vertex z : satisfied) forbidden.insert(phi.value(z));
            for (Vertex w : around) {
                if (std::find(satisfied.begin(), satisfied.end(), w) != satisfied.end()) continue;
                forbidden.insert(phi.value(w));
                const ColorSet seen = colors_of(phi, g.neighbors(w), y);
                forbidden.insert(seen.begin(), seen.end());
            }
            limit = satisfied.size() + (r - satisfied.size()) * r;
        } else {
            case_tag = 2;
            for (Vertex w : around) {
                forbidden.insert(phi.value(w));
                const ColorSet seen = colors_of(phi, g.neighbors(w), y);
                forbidden.insert(seen.begin(), seen.end());
            }
            limit = r * r;
        }
        if (forbidden.size() > limit) {
            throw InvariantError("case " + std::to_string(case_tag) + " forbidden set of size " +
                                 std::to_string(forbidden.size()) + " exceeds " + std::to_string(limit));
        }

        Color chosen = 0;
        for (Color c : point_colors) {
            if (!forbidden.contains(c)) {
                chosen = c;
                break;
            }
        }
        if (chosen == 0) {
            if (report.guaranteed) {
                throw InvariantError("no admissible point colour for block vertex " + std::to_string(y));
            }
            report.success = false;
            report.failure = "no admissible point colour for block vertex " + std::to_string(y) + " (case " +
                             std::to_string(case_tag) + ")";
            break;
        }

        const Color old = phi.value(y);
        phi.assign(y, chosen);
        if (const auto why = r_hued_violation(g, phi, r)) {
            throw InvariantError("recolouring block vertex " + std::to_string(y) + " broke the colouring: " + *why);
        }
        std::vector<Vertex> next = offending();
        if (next.size() >= pending.size()) throw InvariantError("offending block count did not shrink");
        report.steps.push_back({y, case_tag, old, chosen, forbidden.size(), next.size()});
        pending = std::move(next);
    }

    report.output_colors = phi.colors_used();
    return result;
}

} // namespace hued
