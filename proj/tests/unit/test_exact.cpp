#include <doctest.h>

#include "hued/designs.hpp"
#include "hued/errors.hpp"
#include "hued/exact.hpp"
#include "hued/families.hpp"
#include "oracles.hpp"

using namespace hued;

TEST_SUITE("exact") {

TEST_CASE("lower bound") {
    CHECK(hued_lower_bound(families::star(5), 3) == 4);
    CHECK(hued_lower_bound(Graph::edgeless(4), 2) == 1);
    CHECK(hued_lower_bound(families::petersen(), 3) == 4);
}

TEST_CASE("complete graphs need n colours for every r") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::size_t r = 1; r <= 4; ++r) CHECK(exact_chi_r(families::complete(n), r).chi_r == n);
    }
}

TEST_CASE("cycles") {
    CHECK(exact_chi_r(families::cycle(5), 2).chi_r == 5);
    CHECK(exact_chi_r(families::cycle(6), 2).chi_r == 3);
    CHECK(exact_chi_r(families::cycle(4), 2).chi_r == 4);
    CHECK(exact_chi_r(families::cycle(5), 1).chi_r == 3);
}

TEST_CASE("chromatic number cross-checks") {
    CHECK(exact_chi_r(families::complete(4), 1).chi_r == oracle::chi_r_by_partitions(families::complete(4), 1));
    CHECK(exact_chi_r(families::petersen(), 1).chi_r == 3);
    CHECK(oracle::chi_r_by_partitions(families::petersen(), 1) == 3);
}

TEST_CASE("witness is r-hued with exactly chi_r colours") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = families::gnp(9, 0.35, seed);
        for (std::size_t r = 1; r <= 3; ++r) {
            const auto res = exact_chi_r(g, r);
            CHECK_FALSE(res.timed_out);
            CHECK(is_r_hued(g, res.witness, r));
            CHECK(res.witness.colors_used() == res.chi_r);
        }
    }
}

TEST_CASE("agrees with the partition oracle on small random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = families::gnp(3 + seed % 7, 0.45, seed + 100);
        for (std::size_t r = 1; r <= 3; ++r) {
            CAPTURE(seed);
            CHECK(exact_chi_r(g, r).chi_r == oracle::chi_r_by_partitions(g, r));
        }
    }
}

TEST_CASE("partition oracle agrees with the assignment oracle") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = families::gnp(5, 0.5, seed);
        for (std::size_t r = 1; r <= 3; ++r) CHECK(oracle::chi_r_by_partitions(g, r) == oracle::chi_r_by_assignments(g, r));
    }
}

TEST_CASE("chi at r = Delta equals chi of the square") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = families::gnp(8, 0.3, seed + 7);
        if (g.max_degree() == 0) continue;
        CHECK(exact_chi_r(g, g.max_degree()).chi_r == oracle::chi_r_by_partitions(oracle::square_by_matrix(g), 1));
    }
}

TEST_CASE("probing a fixed k") {
    const Graph c5 = families::cycle(5);
    CHECK(probe_k_colors(c5, 2, 4).feasible == std::optional<bool>(false));
    const auto yes = probe_k_colors(c5, 2, 5);
    REQUIRE(yes.feasible == std::optional<bool>(true));
    CHECK(is_r_hued(c5, yes.witness, 2));
}

TEST_CASE("budgets") {
    ExactBudget small;
    small.max_vertices = 5;
    CHECK_THROWS_AS(exact_chi_r(families::cycle(6), 2, small), InputError);
    CHECK_THROWS_AS(exact_chi_r(families::cycle(6), 0), InputError);

    ExactBudget capped;
    capped.max_colors = 4;
    const auto none = exact_chi_r(families::cycle(5), 2, capped);
    CHECK(none.exhausted_max_colors);
    CHECK(none.chi_r == 0);

    // A node limit too small to finish still returns a verified colouring.
    ExactBudget tiny;
    tiny.node_limit = 3;
    const Graph heawood = levi_graph(projective_plane(2)).graph;
    const auto res = exact_chi_r(heawood, 3, tiny);
    CHECK(res.timed_out);
    CHECK(is_r_hued(heawood, res.witness, 3));
    CHECK(res.chi_r == res.witness.colors_used());
    CHECK(res.chi_r >= 7);
}

TEST_CASE("empty graph") {
    const auto res = exact_chi_r(Graph::edgeless(0), 2);
    CHECK(res.chi_r == 0);
    CHECK(exact_chi_r(Graph::edgeless(3), 2).chi_r == 1);
}

} // TEST_SUITE

TEST_SUITE("oracles") {

TEST_CASE("numbers of graphs up to isomorphism") {
    // OEIS A000088 and A001349.
    const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    const std::size_t connected[] = {1, 1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(oracle::all_graphs(n).size() == all[n]);
        CHECK(oracle::connected_graphs(n).size() == connected[n]);
    }
}

TEST_CASE("naive girth") {
    CHECK(oracle::girth_by_cycles(families::cycle(7)) == std::optional<std::size_t>(7));
    CHECK_FALSE(oracle::girth_by_cycles(families::star(4)).has_value());
}

} // TEST_SUITE
