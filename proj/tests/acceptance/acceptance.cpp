// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
// Each criterion recomputes its verdict with the test-side oracles where one
// exists (definition-level r-hued check, partition enumeration, matrix square)
// instead of trusting the library's own verifiers.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hued/designs.hpp"
#include "hued/errors.hpp"
#include "hued/exact.hpp"
#include "hued/families.hpp"
#include "hued/greedy.hpp"
#include "hued/random.hpp"
#include "hued/recolor.hpp"
#include "oracles.hpp"

using namespace hued;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::vector<int> as_ints(const PartialColoring& phi) {
    std::vector<int> out;
    for (Color c : phi.values()) out.push_back(static_cast<int>(c));
    return out;
}

bool hued_ok(const Graph& g, const PartialColoring& phi, std::size_t r) {
    if (!phi.is_total()) return false;
    return oracle::hued_by_definition(oracle::adjacency_matrix(g), as_ints(phi), r);
}

std::size_t bound_for(const Graph& g, std::size_t r) {
    const std::size_t delta = g.max_degree();
    const std::size_t rp = std::min(r, delta);
    return rp <= 1 ? delta + 1 : (rp - 1) * (delta + 1) + 2;
}

// The 500 (graph, r, order) instances shared by the first two criteria.
struct GreedyCase {
    Graph g;
    std::size_t r;
    VertexOrder order;
    std::uint64_t seed;
};

std::vector<GreedyCase> greedy_cases() {
    std::vector<GreedyCase> cases;
    Rng rng(20240611);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 10 + rng.below(111);
        const double p = 0.05 * static_cast<double>(1 + rng.below(10));
        const std::size_t r = 2 + static_cast<std::size_t>(i % 4);
        const std::uint64_t seed = rng.next();
        cases.push_back({families::gnp(n, p, seed), r, i % 2 ? VertexOrder::Random : VertexOrder::Index, seed});
    }
    return cases;
}

Outcome ac1_bound(const std::vector<GreedyCase>& cases) {
    Outcome out;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        GreedyOptions options{c.r, c.order, c.seed, false, false};
        const auto res = greedy_r_hued(c.g, options);
        if (!hued_ok(c.g, res.coloring, c.r)) out.fail("case " + std::to_string(i) + ": not r-hued");
        if (res.coloring.colors_used() > bound_for(c.g, c.r)) {
            out.fail("case " + std::to_string(i) + ": " + std::to_string(res.coloring.colors_used()) + " colours > " +
                     std::to_string(bound_for(c.g, c.r)));
        }
    }
    if (out.pass) out.detail = std::to_string(cases.size()) + " runs within (r'-1)(Delta+1)+2";
    return out;
}

Outcome ac2_steps(const std::vector<GreedyCase>& cases) {
    Outcome out;
    std::size_t steps = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        GreedyOptions options{c.r, c.order, c.seed, true, true};
        try {
            const auto res = greedy_r_hued(c.g, options);
            const std::size_t delta = c.g.max_degree();
            const std::size_t rp = res.effective_r;
            for (const auto& step : res.log) {
                ++steps;
                bool ok = true;
                if (step.step_case == StepCase::FewWeak) ok = step.forbidden <= delta + (rp - 1) * (rp - 1);
                if (step.step_case == StepCase::ManyWeak) {
                    ok = step.forbidden <= delta * (rp - 1);
                    for (auto [w, size] : step.weak_recolored) ok = ok && size <= 1 + (delta + 1) * (rp - 1);
                }
                if (!ok) out.fail("case " + std::to_string(i) + ": forbidden set above its bound");
            }
            if (!hued_ok(c.g, res.coloring, c.r)) out.fail("case " + std::to_string(i) + ": final colouring invalid");
        } catch (const InvariantError& e) {
            out.fail("case " + std::to_string(i) + ": " + e.what());
        }
    }
    if (out.pass) out.detail = std::to_string(steps) + " step boundaries checked";
    return out;
}

Outcome ac3_oracle() {
    Outcome out;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const Graph& g : oracle::connected_graphs(n)) {
            ++graphs;
            for (std::size_t r = 1; r <= 3; ++r) {
                const auto res = exact_chi_r(g, r);
                const std::size_t naive = oracle::chi_r_by_partitions(g, r);
                if (res.timed_out || res.chi_r != naive || !hued_ok(g, res.witness, r) ||
                    res.witness.colors_used() != naive) {
                    out.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": exact " +
                             std::to_string(res.chi_r) + " vs naive " + std::to_string(naive));
                }
            }
        }
    }
    if (graphs != 1 + 1 + 2 + 6 + 21 + 112 + 853) out.fail("enumerated " + std::to_string(graphs) + " graphs");
    if (out.pass) out.detail = std::to_string(graphs) + " connected graphs x r in {1,2,3}";
    return out;
}

Outcome ac4_known() {
    Outcome out;
    struct Known {
        const char* name;
        Graph g;
        std::size_t r;
        Color value;
    };
    const Known known[] = {
        {"C5", families::cycle(5), 2, 5},
        {"Petersen", families::petersen(), 3, 10},
        {"Heawood", levi_graph(projective_plane(2)).graph, 3, 7},
    };
    std::string detail;
    for (const auto& k : known) {
        const auto res = exact_chi_r(k.g, k.r);
        if (res.timed_out || res.chi_r != k.value || !hued_ok(k.g, res.witness, k.r)) {
            out.fail(std::string(k.name) + ": got " + std::to_string(res.chi_r));
        }
        detail += std::string(detail.empty() ? "" : ", ") + k.name + "=" + std::to_string(res.chi_r);
    }
    if (out.pass) out.detail = detail;
    return out;
}

// Pair coverage counted directly, independent of verify_steiner.
bool covers_pairs_once(const SteinerSystem& s) {
    std::vector<int> seen(s.n * s.n, 0);
    for (const auto& block : s.blocks) {
        if (block.size() != s.r) return false;
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                if (block[i] >= s.n || block[j] >= s.n || block[i] == block[j]) return false;
                ++seen[block[i] * s.n + block[j]];
                ++seen[block[j] * s.n + block[i]];
            }
        }
    }
    for (std::size_t a = 0; a < s.n; ++a) {
        for (std::size_t b = 0; b < s.n; ++b) {
            if (a != b && seen[a * s.n + b] != 1) return false;
        }
    }
    return true;
}

// Bipartite with no two vertices sharing two neighbours, i.e. girth >= 6.
bool girth_at_least_six(const Graph& g) {
    if (!bipartition(g)) return false;
    const auto adj = oracle::adjacency_matrix(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            int common = 0;
            for (std::size_t w = 0; w < n; ++w) common += adj[u][w] && adj[v][w];
            if (common >= 2) return false;
        }
    }
    return true;
}

Outcome ac5_designs() {
    Outcome out;
    std::vector<std::pair<std::string, std::function<SteinerSystem()>>> builds;
    for (std::size_t n : {9u, 15u, 21u, 27u}) builds.emplace_back("bose " + std::to_string(n), [n] { return bose_triple_system(n); });
    for (std::size_t n : {7u, 13u, 19u, 25u}) {
        builds.emplace_back("skolem " + std::to_string(n), [n] { return skolem_triple_system(n); });
    }
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        builds.emplace_back("projective " + std::to_string(q), [q] { return projective_plane(q); });
        builds.emplace_back("affine " + std::to_string(q), [q] { return affine_plane(q); });
    }
    for (const auto& [name, build] : builds) {
        const SteinerSystem s = build();
        if (!verify_steiner(s).ok || !covers_pairs_once(s)) {
            out.fail(name + " does not verify");
            continue;
        }
        const std::size_t k = (s.n - 1) / (s.r - 1);
        const LeviGraph lg = levi_graph(s);
        for (Vertex v = 0; v < lg.graph.vertex_count(); ++v) {
            if (lg.graph.degree(v) != (v < s.n ? k : s.r)) out.fail(name + ": Levi graph not (k, r)-biregular");
        }
        if (!girth_at_least_six(lg.graph)) out.fail(name + ": Levi graph girth below 6");
        const auto g = girth(lg.graph);
        if (g && *g < 6) out.fail(name + ": girth() reports " + std::to_string(*g));
    }
    if (out.pass) out.detail = std::to_string(builds.size()) + " systems and Levi graphs";
    return out;
}

bool points_distinct(const PartialColoring& phi, std::size_t n) {
    std::set<Color> colors;
    for (Vertex v = 0; v < n; ++v) colors.insert(phi.value(v));
    return colors.size() == n;
}

Outcome ac6_lower_bound() {
    Outcome out;
    const std::pair<SteinerSystem, std::size_t> systems[] = {
        {pairs_system(5), 2}, {projective_plane(2), 3}, {bose_triple_system(9), 3}};
    std::size_t witnesses = 0;
    for (const auto& [s, r] : systems) {
        const LeviGraph lg = levi_graph(s);
        const std::string name = "S(2," + std::to_string(r) + "," + std::to_string(s.n) + ")";
        std::vector<PartialColoring> colorings;
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            GreedyOptions options{r, seed == 0 ? VertexOrder::Index : VertexOrder::Random, seed, true, false};
            colorings.push_back(greedy_r_hued(lg.graph, options).coloring);
        }
        ExactBudget budget;
        budget.timeout_ms = 120000;
        const auto exact = exact_chi_r(lg.graph, r, budget);
        colorings.push_back(exact.witness);
        if (!exact.timed_out && exact.chi_r < s.n) out.fail(name + ": exact chi_r below n");
        for (const auto& phi : colorings) {
            ++witnesses;
            if (!hued_ok(lg.graph, phi, r)) out.fail(name + ": witness not r-hued");
            if (!points_distinct(phi, s.n)) out.fail(name + ": two points share a colour");
        }
    }
    if (out.pass) out.detail = std::to_string(witnesses) + " witnesses with distinct point colours";
    return out;
}

std::size_t offending_blocks(const LeviGraph& lg, const std::vector<Color>& colors) {
    const std::set<Color> point_colors(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(lg.point_count()));
    std::size_t count = 0;
    for (std::size_t v = lg.point_count(); v < colors.size(); ++v) count += !point_colors.count(colors[v]);
    return count;
}

// Replays the report's steps and checks validity and progress after each.
void check_reduction(const LeviGraph& lg, const PartialColoring& input, std::size_t r, const std::string& name,
                     Outcome& out) {
    const auto res = reduce_levi_coloring(lg, input, r);
    const auto adj = oracle::adjacency_matrix(lg.graph);
    std::vector<Color> colors(input.values().begin(), input.values().end());
    std::size_t offending = offending_blocks(lg, colors);
    for (const auto& step : res.report.steps) {
        if (colors[step.block_vertex] != step.old_color) out.fail(name + ": step log out of sync");
        colors[step.block_vertex] = step.new_color;
        std::vector<int> as(colors.begin(), colors.end());
        if (!oracle::hued_by_definition(adj, as, r)) out.fail(name + ": a step broke the r-hued condition");
        const std::size_t now = offending_blocks(lg, colors);
        if (now >= offending || now != step.offending_after) out.fail(name + ": offending count did not shrink");
        offending = now;
    }
    if (std::vector<Color>(res.coloring.values().begin(), res.coloring.values().end()) != colors) {
        out.fail(name + ": replay disagrees with the result");
    }
    const std::size_t n = lg.point_count();
    if (!res.report.success || !hued_ok(lg.graph, res.coloring, r)) out.fail(name + ": reduction failed");
    if (res.coloring.colors_used() != n) {
        out.fail(name + ": " + std::to_string(res.coloring.colors_used()) + " colours, expected " + std::to_string(n));
    }
}

Outcome ac7_pipeline() {
    Outcome out;
    const std::pair<SteinerSystem, std::size_t> systems[] = {{pairs_system(5), 2}, {skolem_triple_system(13), 3}};
    std::size_t runs = 0;
    for (const auto& [s, r] : systems) {
        const LeviGraph lg = levi_graph(s);
        const std::string name = "S(2," + std::to_string(r) + "," + std::to_string(s.n) + ")";
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            GreedyOptions options{r, seed == 0 ? VertexOrder::Index : VertexOrder::Random, seed, true, false};
            check_reduction(lg, greedy_r_hued(lg.graph, options).coloring, r, name, out);
            ++runs;
        }
        // Every block on a colour of its own forces one step per block.
        std::vector<Color> fresh(lg.graph.vertex_count());
        for (std::size_t v = 0; v < fresh.size(); ++v) fresh[v] = static_cast<Color>(v + 1);
        check_reduction(lg, PartialColoring::from_values(fresh, static_cast<Color>(fresh.size())), r, name, out);
        ++runs;
    }
    if (out.pass) out.detail = std::to_string(runs) + " greedy -> reduce runs end with n colours";
    return out;
}

Outcome ac8_chain() {
    Outcome out;
    Rng rng(8);
    int graphs = 0;
    while (graphs < 50) {
        const std::size_t n = 2 + rng.below(8);
        const double p = 0.2 + 0.1 * static_cast<double>(rng.below(5));
        const Graph g = families::gnp(n, p, rng.next());
        const std::size_t delta = g.max_degree();
        if (delta == 0) continue;
        ++graphs;
        Color previous = 0;
        for (std::size_t r = 1; r <= delta; ++r) {
            const auto res = exact_chi_r(g, r);
            if (res.timed_out || res.chi_r < previous) out.fail("chain decreases at r=" + std::to_string(r));
            previous = res.chi_r;
        }
        const std::size_t square_chi = oracle::chi_r_by_partitions(oracle::square_by_matrix(g), 1);
        if (previous != square_chi) {
            out.fail("chi_Delta " + std::to_string(previous) + " != chi(G^2) " + std::to_string(square_chi));
        }
    }
    if (out.pass) out.detail = std::to_string(graphs) + " graphs, chain monotone, top equals chi(G^2)";
    return out;
}

} // namespace

int main() {
    const auto cases = greedy_cases();
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"AC1 greedy bound compliance", [&] { return ac1_bound(cases); }},
        {"AC2 step invariants", [&] { return ac2_steps(cases); }},
        {"AC3 exact vs naive oracle", ac3_oracle},
        {"AC4 known values", ac4_known},
        {"AC5 design generators", ac5_designs},
        {"AC6 point colours distinct", ac6_lower_bound},
        {"AC7 Levi reduction pipeline", ac7_pipeline},
        {"AC8 hue chain and square", ac8_chain},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.2fs): %s\n", out.pass ? "PASS" : "FAIL", name, seconds, out.detail.c_str());
        std::fflush(stdout);
        failures += !out.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
