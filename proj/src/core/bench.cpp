#include "hued/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <thread>

#include "hued/designs.hpp"
#include "hued/errors.hpp"
#include "hued/exact.hpp"
#include "hued/families.hpp"
#include "hued/greedy.hpp"

namespace hued {
namespace {

using Clock = std::chrono::steady_clock;

struct Task {
    std::string instance;
    std::function<Graph()> build;
    std::size_t r;
};

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finaliser
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string format_double(double value, const char* pattern) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, pattern, value);
    return buffer;
}

SteinerSystem design_by_name(const std::string& entry) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos) throw InputError("design '" + entry + "' must look like kind:parameter");
    const std::string kind = entry.substr(0, colon);
    std::size_t param = 0;
    try {
        param = std::stoul(entry.substr(colon + 1));
    } catch (const std::exception&) {
        throw InputError("design '" + entry + "' has a non-numeric parameter");
    }
    if (kind == "pairs") return pairs_system(param);
    if (kind == "bose") return bose_triple_system(param);
    if (kind == "skolem") return skolem_triple_system(param);
    if (kind == "projective") return projective_plane(static_cast<std::uint32_t>(param));
    if (kind == "affine") return affine_plane(static_cast<std::uint32_t>(param));
    throw InputError("unknown design kind '" + kind + "'");
}

std::vector<Task> plan(const BenchConfig& config) {
    std::vector<Task> tasks;
    if (config.family == BenchFamily::Gnp) {
        if (config.rs.empty()) throw InputError("gnp benchmark needs at least one r");
        for (std::size_t ni = 0; ni < config.sizes.size(); ++ni) {
            for (std::size_t pi = 0; pi < config.probabilities.size(); ++pi) {
                for (std::size_t t = 0; t < config.trials; ++t) {
                    const std::size_t n = config.sizes[ni];
                    const double p = config.probabilities[pi];
                    const std::uint64_t seed = mix(mix(mix(config.seed) ^ ni) ^ (pi << 20)) ^ t;
                    const std::string id =
                        "gnp-n" + std::to_string(n) + "-p" + format_double(p, "%g") + "-t" + std::to_string(t);
                    for (std::size_t r : config.rs) {
                        tasks.push_back({id, [n, p, seed] { return families::gnp(n, p, seed); }, r});
                    }
                }
            }
        }
    } else {
        for (const auto& entry : config.designs) {
            const SteinerSystem system = design_by_name(entry);
            const auto rs = config.rs.empty() ? std::vector<std::size_t>{system.r} : config.rs;
            for (std::size_t r : rs) {
                tasks.push_back({"levi-" + entry, [system] { return levi_graph(system).graph; }, r});
            }
        }
    }
    return tasks;
}

BenchRecord evaluate(const Task& task, const BenchConfig& config) {
    const Graph g = task.build();
    BenchRecord rec;
    rec.instance = task.instance;
    rec.n = g.vertex_count();
    rec.delta = g.max_degree();
    rec.r = task.r;
    rec.thm4_bound = greedy_palette_bound(rec.delta, rec.r);
    rec.thm2_bound = rec.r * rec.delta + 1;

    GreedyOptions options;
    options.r = task.r;
    options.check_invariants = false;
    auto start = Clock::now();
    const GreedyResult greedy = greedy_r_hued(g, options);
    rec.ms_greedy = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (!is_r_hued(g, greedy.coloring, task.r)) {
        throw InvariantError("greedy colouring of " + task.instance + " failed verification");
    }
    rec.greedy = greedy.coloring.colors_used();

    if (rec.n <= config.exact_max_vertices) {
        ExactBudget budget;
        budget.max_vertices = config.exact_max_vertices;
        budget.timeout_ms = config.exact_timeout_ms;
        start = Clock::now();
        const ExactResult exact = exact_chi_r(g, task.r, budget);
        if (!exact.timed_out) {
            rec.exact = exact.chi_r;
            rec.ms_exact = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }
    }
    return rec;
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    const std::vector<Task> tasks = plan(config);
    std::vector<BenchRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
            try {
                records[i] = evaluate(tasks[i], config);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(1, tasks.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool timing) {
    std::string out = "instance,n,delta,r,greedy,thm4_bound,thm2_bound,exact,ms_greedy,ms_exact\n";
    for (const auto& rec : records) {
        out += rec.instance + "," + std::to_string(rec.n) + "," + std::to_string(rec.delta) + "," +
               std::to_string(rec.r) + "," + std::to_string(rec.greedy) + "," + std::to_string(rec.thm4_bound) + "," +
               std::to_string(rec.thm2_bound) + "," + (rec.exact ? std::to_string(*rec.exact) : "") + ",";
        if (timing) {
            out += format_double(rec.ms_greedy, "%.3f") + "," + (rec.ms_exact ? format_double(*rec.ms_exact, "%.3f") : "");
        } else {
            out += ",";
        }
        out += "\n";
    }
    return out;
}

std::optional<std::string> bench_violation(const std::vector<BenchRecord>& records) {
    for (const auto& rec : records) {
        if (rec.greedy > rec.thm4_bound) {
            return rec.instance + " r=" + std::to_string(rec.r) + ": greedy " + std::to_string(rec.greedy) +
                   " exceeds bound " + std::to_string(rec.thm4_bound);
        }
        if (rec.exact && *rec.exact > rec.greedy) {
            return rec.instance + " r=" + std::to_string(rec.r) + ": exact " + std::to_string(*rec.exact) +
                   " exceeds greedy " + std::to_string(rec.greedy);
        }
    }
    return std::nullopt;
}

} // namespace hued
