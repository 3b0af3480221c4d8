#include "hued/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hued/errors.hpp"
#include "hued/random.hpp"

namespace hued {
namespace {

// Set of colours with O(1) clear, indexed 1..palette.
class ColorMarks {
public:
    explicit ColorMarks(Color palette) : stamp_(static_cast<std::size_t>(palette) + 1, 0) {}

    void clear() {
        ++epoch_;
        count_ = 0;
    }

    void mark(Color c) {
        if (c != 0 && stamp_[c] != epoch_) {
            stamp_[c] = epoch_;
            ++count_;
        }
    }

    bool contains(Color c) const { return stamp_[c] == epoch_; }
    std::size_t size() const { return count_; }

    // Smallest colour in 1..palette not marked, or 0.
    Color smallest_free() const {
        for (Color c = 1; c < stamp_.size(); ++c) {
            if (stamp_[c] != epoch_) return c;
        }
        return 0;
    }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 1;
    std::size_t count_ = 0;
};

class GreedyRun {
public:
    GreedyRun(const Graph& g, const GreedyOptions& options)
        : g_(g),
          delta_(g.max_degree()),
          r_(std::min(options.r, delta_)),
          bound_(greedy_palette_bound(delta_, options.r)),
          options_(options),
          phi_(g.vertex_count(), bound_),
          forbidden_(bound_),
          scratch_(bound_) {}

    GreedyResult run() {
        for (Vertex v : visiting_order()) {
            if (phi_.is_colored(v)) continue; // already left U in an earlier Case 2
            if (r_ <= 1) {
                first_fit(v);
            } else {
                const NeighborSplit split = split_neighbors(v);
                if (split.weak.size() <= r_ - 1) {
                    color_alone(v, split);
                } else {
                    color_with_weak(v, split);
                }
            }
            if (options_.check_invariants) check_step(v);
        }
        if (options_.check_invariants && !is_r_hued(g_, phi_, r_)) {
            throw InvariantError("greedy output is not " + std::to_string(r_) + "-hued");
        }
        return GreedyResult{std::move(phi_), r_, bound_, std::move(log_)};
    }

private:
    std::vector<Vertex> visiting_order() const {
        std::vector<Vertex> order(g_.vertex_count());
        std::iota(order.begin(), order.end(), Vertex{0});
        if (options_.order == VertexOrder::Random) {
            Rng rng(options_.seed);
            rng.shuffle(order);
        }
        return order;
    }

    // |phi(N(x))|
    std::size_t seen_colors(Vertex x) {
        scratch_.clear();
        for (Vertex y : g_.neighbors(x)) scratch_.mark(phi_.value(y));
        return scratch_.size();
    }

    bool is_weak(Vertex x) { return seen_colors(x) <= r_ - 1; }

    NeighborSplit split_neighbors(Vertex v) {
        NeighborSplit split;
        for (Vertex x : g_.neighbors(v)) (is_weak(x) ? split.weak : split.strong).push_back(x);
        return split;
    }

    void forbid_neighborhood(Vertex x) {
        for (Vertex y : g_.neighbors(x)) forbidden_.mark(phi_.value(y));
    }

    Color pick(Vertex v, std::size_t limit, const char* what) {
        if (forbidden_.size() > limit) {
            throw InvariantError(std::string(what) + " forbidden set of size " + std::to_string(forbidden_.size()) +
                                 " exceeds " + std::to_string(limit) + " at vertex " + std::to_string(v));
        }
        const Color c = forbidden_.smallest_free();
        if (c == 0) {
            throw InvariantError("palette of " + std::to_string(bound_) + " colours exhausted at vertex " +
                                 std::to_string(v));
        }
        phi_.assign(v, c);
        return c;
    }

    void first_fit(Vertex v) {
        forbidden_.clear();
        forbid_neighborhood(v);
        pick(v, delta_, "first-fit");
        if (options_.record_log) log_.push_back({v, StepCase::FirstFit, forbidden_.size(), {}});
    }

    // |W(v)| <= r'-1: avoid phi(N(v)) and the colours seen by each weak neighbour.
    void color_alone(Vertex v, const NeighborSplit& split) {
        forbidden_.clear();
        forbid_neighborhood(v);
        for (Vertex x : split.weak) forbid_neighborhood(x);
        pick(v, delta_ + (r_ - 1) * (r_ - 1), "case 1");
        if (options_.record_log) log_.push_back({v, StepCase::FewWeak, forbidden_.size(), {}});
    }

    // |W(v)| >= r': clear W(v), colour v, then give W(v) fresh colours so the
    // first r' of them are pairwise distinct.
    void color_with_weak(Vertex v, const NeighborSplit& split) {
        for (Vertex w : split.weak) phi_.unassign(w);

        forbidden_.clear();
        for (Vertex s : split.strong) forbidden_.mark(phi_.value(s));
        for (Vertex x : split.weak) forbid_neighborhood(x);
        pick(v, delta_ * (r_ - 1), "case 2 centre");

        StepRecord record{v, StepCase::ManyWeak, forbidden_.size(), {}};
        const std::size_t weak_limit = 1 + (delta_ + 1) * (r_ - 1);
        for (std::size_t j = 0; j < split.weak.size(); ++j) {
            const Vertex w = split.weak[j];
            forbidden_.clear();
            forbidden_.mark(phi_.value(v));
            for (Vertex y : g_.neighbors(w)) {
                if (y == v) continue;
                forbidden_.mark(phi_.value(y));
                // weak status is taken against the current colouring
                if (is_weak(y)) forbid_neighborhood(y);
            }
            if (j < r_) {
                for (std::size_t l = 0; l < j; ++l) forbidden_.mark(phi_.value(split.weak[l]));
            }
            pick(w, weak_limit, "case 2 weak");
            record.weak_recolored.emplace_back(w, forbidden_.size());
        }
        if (options_.record_log) log_.push_back(std::move(record));
    }

    void check_step(Vertex v) {
        if (!phi_.is_colored(v)) throw InvariantError("vertex " + std::to_string(v) + " left U uncoloured");
        if (!is_partial_r_hued(g_, phi_, r_)) {
            throw InvariantError("partial " + std::to_string(r_) + "-hued condition broken after step at vertex " +
                                 std::to_string(v));
        }
        if (!rainbow_invariant_holds(g_, phi_, r_)) {
            throw InvariantError("rainbow invariant broken after step at vertex " + std::to_string(v));
        }
    }

    const Graph& g_;
    std::size_t delta_;
    std::size_t r_;
    Color bound_;
    GreedyOptions options_;
    PartialColoring phi_;
    ColorMarks forbidden_;
    ColorMarks scratch_;
    std::vector<StepRecord> log_;
};

} // namespace

Color greedy_palette_bound(std::size_t max_degree, std::size_t r) {
    const std::size_t effective = std::min(r, max_degree);
    if (effective <= 1) return static_cast<Color>(max_degree + 1);
    return static_cast<Color>((effective - 1) * (max_degree + 1) + 2);
}

GreedyResult greedy_r_hued(const Graph& g, const GreedyOptions& options) {
    if (options.r < 1) throw InputError("r must be at least 1");
    return GreedyRun(g, options).run();
}

} // namespace hued
