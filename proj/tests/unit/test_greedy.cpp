#include <doctest.h>

#include "hued/errors.hpp"
#include "hued/exact.hpp"
#include "hued/families.hpp"
#include "hued/greedy.hpp"

using namespace hued;

namespace {

GreedyResult run(const Graph& g, std::size_t r, VertexOrder order = VertexOrder::Index, std::uint64_t seed = 0) {
    GreedyOptions options;
    options.r = r;
    options.order = order;
    options.seed = seed;
    options.check_invariants = true;
    options.record_log = true;
    return greedy_r_hued(g, options);
}

} // namespace

TEST_SUITE("greedy") {

TEST_CASE("palette bound") {
    CHECK(greedy_palette_bound(3, 2) == 6);
    CHECK(greedy_palette_bound(2, 2) == 5);
    CHECK(greedy_palette_bound(3, 3) == 10);
    CHECK(greedy_palette_bound(4, 1) == 5);
    CHECK(greedy_palette_bound(2, 7) == 5); // r clamped to Delta
    CHECK(greedy_palette_bound(0, 3) == 1);
}

TEST_CASE("complete graph K4") {
    const auto res = run(families::complete(4), 2);
    CHECK(is_r_hued(families::complete(4), res.coloring, 2));
    CHECK(res.coloring.colors_used() == 4);
    CHECK(res.bound == 6);
}

TEST_CASE("five-cycle needs all five colours") {
    const auto res = run(families::cycle(5), 2);
    CHECK(is_r_hued(families::cycle(5), res.coloring, 2));
    CHECK(res.coloring.colors_used() <= 5);
    CHECK(res.coloring.colors_used() == exact_chi_r(families::cycle(5), 2).chi_r);
}

TEST_CASE("Petersen with r = 3") {
    const Graph p = families::petersen();
    const auto res = run(p, 3);
    CHECK(is_r_hued(p, res.coloring, 3));
    CHECK(res.coloring.colors_used() <= 10);
    CHECK(res.effective_r == 3);
}

TEST_CASE("r above Delta is clamped") {
    const auto res = run(families::cycle(7), 5);
    CHECK(res.effective_r == 2);
    CHECK(is_r_hued(families::cycle(7), res.coloring, 5));
}

TEST_CASE("r = 1 and edgeless graphs use first fit") {
    const Graph g = families::gnp(30, 0.2, 3);
    const auto res = run(g, 1);
    CHECK(is_r_hued(g, res.coloring, 1));
    CHECK(res.coloring.colors_used() <= g.max_degree() + 1);
    for (const auto& step : res.log) CHECK(step.step_case == StepCase::FirstFit);

    const auto empty = run(Graph::edgeless(4), 3);
    CHECK(empty.coloring.colors_used() == 1);
    CHECK(run(Graph::edgeless(0), 2).coloring.vertex_count() == 0);
}

TEST_CASE("r = 0 is rejected") {
    GreedyOptions options;
    options.r = 0;
    CHECK_THROWS_AS(greedy_r_hued(families::path(3), options), InputError);
}

TEST_CASE("step log respects the forbidden-set bounds") {
    const Graph g = families::gnp(60, 0.15, 11);
    const std::size_t delta = g.max_degree();
    for (std::size_t r = 2; r <= 5; ++r) {
        const auto res = run(g, r);
        const std::size_t rp = res.effective_r;
        bool saw_many = false;
        for (const auto& step : res.log) {
            if (step.step_case == StepCase::FewWeak) {
                CHECK(step.forbidden <= delta + (rp - 1) * (rp - 1));
            } else if (step.step_case == StepCase::ManyWeak) {
                saw_many = true;
                CHECK(step.forbidden <= delta * (rp - 1));
                CHECK(step.weak_recolored.size() >= rp);
                for (auto [w, size] : step.weak_recolored) CHECK(size <= 1 + (delta + 1) * (rp - 1));
            }
        }
        CHECK(saw_many); // the second case is exercised on this instance
    }
}

TEST_CASE("random orders: valid and within bound") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = families::gnp(10 + seed % 50, 0.05 + 0.01 * static_cast<double>(seed % 40), seed);
        for (std::size_t r = 1; r <= 6; ++r) {
            const auto res = run(g, r, VertexOrder::Random, seed * 31 + r);
            CAPTURE(seed);
            CAPTURE(r);
            CHECK(is_r_hued(g, res.coloring, r));
            CHECK(res.coloring.colors_used() <= greedy_palette_bound(g.max_degree(), r));
        }
    }
}

TEST_CASE("same seed gives the same colouring") {
    const Graph g = families::gnp(80, 0.1, 5);
    CHECK(run(g, 3, VertexOrder::Random, 9).coloring == run(g, 3, VertexOrder::Random, 9).coloring);
}

TEST_CASE("greedy never beats the exact optimum") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = families::gnp(8, 0.4, seed);
        for (std::size_t r = 1; r <= 3; ++r) {
            CHECK(run(g, r).coloring.colors_used() >= exact_chi_r(g, r).chi_r);
        }
    }
}

} // TEST_SUITE
