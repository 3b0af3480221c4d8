#include "hued/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "hued/errors.hpp"
#include "hued/greedy.hpp"

namespace hued {
namespace {

using Clock = std::chrono::steady_clock;

class BudgetClock {
public:
    explicit BudgetClock(const ExactBudget& budget) : budget_(budget), start_(Clock::now()) {}

    // Counts one search node; false once the node or time limit is hit.
    bool tick() {
        ++nodes_;
        if (budget_.node_limit != 0 && nodes_ > budget_.node_limit) return false;
        if (budget_.timeout_ms != 0 && (nodes_ & 0xfff) == 0) {
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
            if (static_cast<std::uint64_t>(elapsed.count()) >= budget_.timeout_ms) return false;
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    const ExactBudget& budget_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

enum class Outcome { Found, Exhausted, OutOfBudget };

class KColorSearch {
public:
    KColorSearch(const Graph& g, std::size_t r, Color k, BudgetClock& clock)
        : g_(g),
          k_(k),
          clock_(clock),
          color_(g.vertex_count(), 0),
          hue_count_(g.vertex_count() * (static_cast<std::size_t>(k) + 1), 0),
          distinct_(g.vertex_count(), 0),
          open_(g.vertex_count(), 0),
          need_(g.vertex_count(), 0) {
        order_.resize(g.vertex_count());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            open_[v] = g.degree(v);
            need_[v] = std::min(r, g.degree(v));
        }
    }

    Outcome run() { return descend(0, 0); }

    PartialColoring witness() const { return PartialColoring::from_values(color_, k_); }

private:
    std::uint32_t& hue(Vertex u, Color c) { return hue_count_[u * (static_cast<std::size_t>(k_) + 1) + c]; }

    // Applies x := c (already checked proper) and reports whether every
    // neighbour of x can still reach min(r, deg) distinct colours. Undo with
    // retract() whatever the answer.
    bool place(Vertex x, Color c) {
        color_[x] = c;
        bool feasible = true;
        for (Vertex u : g_.neighbors(x)) {
            if (hue(u, c)++ == 0) ++distinct_[u];
            --open_[u];
            if (distinct_[u] + open_[u] < need_[u]) feasible = false;
        }
        return feasible;
    }

    void retract(Vertex x) {
        const Color c = color_[x];
        for (Vertex u : g_.neighbors(x)) {
            if (--hue(u, c) == 0) --distinct_[u];
            ++open_[u];
        }
        color_[x] = 0;
    }

    Outcome descend(std::size_t depth, Color highest) {
        if (depth == order_.size()) return Outcome::Found;
        const Vertex x = order_[depth];
        // new colours are introduced in increasing order only
        const Color top = std::min<Color>(k_, highest + 1);
        for (Color c = 1; c <= top; ++c) {
            if (!clock_.tick()) return Outcome::OutOfBudget;
            bool conflict = false;
            for (Vertex u : g_.neighbors(x)) {
                if (color_[u] == c) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            if (place(x, c)) {
                const Outcome sub = descend(depth + 1, std::max(highest, c));
                if (sub != Outcome::Exhausted) {
                    if (sub == Outcome::OutOfBudget) retract(x);
                    return sub;
                }
            }
            retract(x);
        }
        return Outcome::Exhausted;
    }

    const Graph& g_;
    Color k_;
    BudgetClock& clock_;
    std::vector<Vertex> order_;
    std::vector<Color> color_;
    std::vector<std::uint32_t> hue_count_;
    std::vector<std::size_t> distinct_;
    std::vector<std::size_t> open_;
    std::vector<std::size_t> need_;
};

void check_preconditions(const Graph& g, std::size_t r, const ExactBudget& budget) {
    if (r < 1) throw InputError("r must be at least 1");
    if (g.vertex_count() > budget.max_vertices) {
        throw InputError("graph has " + std::to_string(g.vertex_count()) + " vertices, exact search cap is " +
                         std::to_string(budget.max_vertices));
    }
}

// Renumber colours to 1..m in order of first use.
PartialColoring compact(const PartialColoring& phi) {
    const auto used = phi.used_color_set();
    std::vector<Color> values(phi.vertex_count());
    for (Vertex v = 0; v < phi.vertex_count(); ++v) {
        const auto it = std::lower_bound(used.begin(), used.end(), phi.value(v));
        values[v] = static_cast<Color>(it - used.begin()) + 1;
    }
    return PartialColoring::from_values(values, std::max<Color>(1, static_cast<Color>(used.size())));
}

} // namespace

Color hued_lower_bound(const Graph& g, std::size_t r) {
    std::size_t best = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, std::min(r, g.degree(v)) + 1);
    return static_cast<Color>(best);
}

KProbe probe_k_colors(const Graph& g, std::size_t r, Color k, const ExactBudget& budget) {
    check_preconditions(g, r, budget);
    if (k == 0) throw InputError("colour count must be positive");
    BudgetClock clock(budget);
    KColorSearch search(g, r, k, clock);
    KProbe probe;
    switch (search.run()) {
    case Outcome::Found:
        probe.feasible = true;
        probe.witness = search.witness();
        break;
    case Outcome::Exhausted: probe.feasible = false; break;
    case Outcome::OutOfBudget: break;
    }
    probe.nodes = clock.nodes();
    return probe;
}

ExactResult exact_chi_r(const Graph& g, std::size_t r, const ExactBudget& budget) {
    check_preconditions(g, r, budget);
    ExactResult result;
    if (g.vertex_count() == 0) {
        return result;
    }
    BudgetClock clock(budget);
    const Color limit = std::min<Color>(static_cast<Color>(g.vertex_count()), budget.max_colors.value_or(UINT32_MAX));
    for (Color k = hued_lower_bound(g, r); k <= limit; ++k) {
        KColorSearch search(g, r, k, clock);
        const Outcome outcome = search.run();
        if (outcome == Outcome::Found) {
            result.chi_r = k;
            result.witness = search.witness();
            result.nodes_explored = clock.nodes();
            return result;
        }
        if (outcome == Outcome::OutOfBudget) {
            // fall back to a verified upper bound, never an unproven optimum
            GreedyOptions options;
            options.r = r;
            options.check_invariants = false;
            result.witness = compact(greedy_r_hued(g, options).coloring);
            if (!is_r_hued(g, result.witness, r)) throw InvariantError("fallback colouring is not r-hued");
            result.chi_r = result.witness.palette_size();
            result.timed_out = true;
            result.nodes_explored = clock.nodes();
            return result;
        }
    }
    result.exhausted_max_colors = true;
    result.nodes_explored = clock.nodes();
    return result;
}

} // namespace hued
