#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hued/coloring.hpp"

namespace hued {

enum class BenchFamily { Gnp, Levi };

struct BenchConfig {
    BenchFamily family = BenchFamily::Gnp;
    // gnp
    std::vector<std::size_t> sizes;
    std::vector<double> probabilities;
    std::size_t trials = 1;
    // levi: "pairs:5", "bose:9", "skolem:13", "projective:3", "affine:4"
    std::vector<std::string> designs;
    // empty for levi means "use the block size"
    std::vector<std::size_t> rs;
    std::uint64_t seed = 0;
    std::size_t exact_max_vertices = 12;
    std::uint64_t exact_timeout_ms = 2000;
    std::size_t jobs = 1;
};

struct BenchRecord {
    std::string instance;
    std::size_t n = 0;
    std::size_t delta = 0;
    std::size_t r = 0;
    std::size_t greedy = 0;
    std::size_t thm4_bound = 0; // (r'-1)(Delta+1)+2, r' = min(r, Delta)
    std::size_t thm2_bound = 0; // r*Delta+1
    std::optional<Color> exact;
    double ms_greedy = 0;
    std::optional<double> ms_exact;
};

// Rows in deterministic instance order whatever the job count.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

// instance,n,delta,r,greedy,thm4_bound,thm2_bound,exact,ms_greedy,ms_exact
// With timing == false the two ms columns are left empty, which makes the
// output a pure function of the configuration.
std::string bench_csv(const std::vector<BenchRecord>& records, bool timing);

// First row breaking greedy <= thm4_bound or exact <= greedy.
std::optional<std::string> bench_violation(const std::vector<BenchRecord>& records);

} // namespace hued
