#include "hued/designs.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hued/errors.hpp"
#include "hued/field.hpp"

namespace hued {
namespace {

std::string show_block(std::size_t index, const Block& block) {
    std::string out = "block " + std::to_string(index) + " {";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + std::to_string(block[i]);
    return out + "}";
}

// Pair-coverage table for points 0..n-1.
class PairTable {
public:
    explicit PairTable(std::size_t n) : n_(n), count_(n * n, 0) {}

    std::uint32_t& at(Vertex a, Vertex b) { return count_[std::min(a, b) * n_ + std::max(a, b)]; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> count_;
};

} // namespace

void SteinerSystem::canonicalize() {
    for (auto& block : blocks) std::sort(block.begin(), block.end());
    std::sort(blocks.begin(), blocks.end());
}

DesignReport verify_steiner(const SteinerSystem& s) {
    auto fail = [](std::string why) { return DesignReport{false, std::move(why)}; };
    if (s.r < 2) return fail("block size r = " + std::to_string(s.r) + " is below 2");
    if (s.n < s.r) return fail("n = " + std::to_string(s.n) + " is smaller than the block size");

    PairTable covered(s.n);
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        const Block& block = s.blocks[i];
        if (block.size() != s.r) {
            return fail(show_block(i, block) + " has " + std::to_string(block.size()) + " points, expected " +
                        std::to_string(s.r));
        }
        for (std::size_t a = 0; a < block.size(); ++a) {
            if (block[a] >= s.n) return fail(show_block(i, block) + " has point outside [0, n)");
            for (std::size_t c = 0; c < a; ++c) {
                if (block[a] == block[c]) return fail(show_block(i, block) + " repeats a point");
            }
        }
        for (std::size_t a = 0; a < block.size(); ++a) {
            for (std::size_t c = a + 1; c < block.size(); ++c) {
                if (++covered.at(block[a], block[c]) > 1) {
                    return fail("pair {" + std::to_string(std::min(block[a], block[c])) + "," +
                                std::to_string(std::max(block[a], block[c])) + "} covered again by " +
                                show_block(i, block));
                }
            }
        }
    }
    for (Vertex a = 0; a < s.n; ++a) {
        for (Vertex c = a + 1; c < s.n; ++c) {
            if (covered.at(a, c) == 0) {
                return fail("pair {" + std::to_string(a) + "," + std::to_string(c) + "} is in no block");
            }
        }
    }
    if ((s.n - 1) % (s.r - 1) != 0) return fail("n - 1 is not divisible by r - 1");
    const std::size_t k = (s.n - 1) / (s.r - 1);
    if (s.n * k != s.blocks.size() * s.r) {
        return fail("nk = " + std::to_string(s.n * k) + " differs from br = " + std::to_string(s.blocks.size() * s.r));
    }
    return {};
}

SteinerSystem pairs_system(std::size_t n) {
    if (n < 2) throw InputError("S(2,2,n) needs n >= 2");
    SteinerSystem s{n, 2, {}};
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) s.blocks.push_back({a, b});
    }
    return s;
}

SteinerSystem bose_triple_system(std::size_t n) {
    if (n < 9 || n % 6 != 3) throw InputError("Bose construction needs n >= 9 with n = 3 (mod 6), got " + std::to_string(n));
    const std::size_t t = (n - 3) / 6;
    const std::size_t m = 2 * t + 1;
    // point (i, a) of Z_m x Z_3
    auto point = [m](std::size_t i, std::size_t a) { return static_cast<Vertex>(i + m * (a % 3)); };
    // idempotent commutative quasigroup on Z_m
    auto op = [m, t](std::size_t i, std::size_t j) { return ((t + 1) * (i + j)) % m; };

    SteinerSystem s{n, 3, {}};
    for (std::size_t i = 0; i < m; ++i) s.blocks.push_back({point(i, 0), point(i, 1), point(i, 2)});
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                s.blocks.push_back({point(i, a), point(j, a), point(op(i, j), a + 1)});
            }
        }
    }
    s.canonicalize();
    return s;
}

SteinerSystem skolem_triple_system(std::size_t n) {
    if (n < 7 || n % 6 != 1) {
        throw InputError("Skolem construction needs n >= 7 with n = 1 (mod 6), got " + std::to_string(n));
    }
    const std::size_t t = (n - 1) / 6;
    const std::size_t m = 2 * t;
    auto point = [m](std::size_t x, std::size_t a) { return static_cast<Vertex>(x + m * (a % 3)); };
    const auto infinity = static_cast<Vertex>(n - 1);
    // half-idempotent commutative quasigroup on Z_2t: relabel the sums of
    // Z_2t by 2c -> c, 2c + 1 -> t + c, so x o x = (t + x) o (t + x) = x.
    auto op = [m, t](std::size_t x, std::size_t y) {
        const std::size_t sum = (x + y) % m;
        return sum % 2 == 0 ? sum / 2 : t + sum / 2;
    };

    SteinerSystem s{n, 3, {}};
    for (std::size_t x = 0; x < t; ++x) {
        s.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
        for (std::size_t a = 0; a < 3; ++a) s.blocks.push_back({infinity, point(t + x, a), point(x, a + 1)});
    }
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t x = 0; x < m; ++x) {
            for (std::size_t y = x + 1; y < m; ++y) {
                s.blocks.push_back({point(x, a), point(y, a), point(op(x, y), a + 1)});
            }
        }
    }
    s.canonicalize();
    return s;
}

SteinerSystem projective_plane(std::uint32_t q) {
    const FiniteField field(q);
    // normalised homogeneous coordinates: (1,a,b), (0,1,a), (0,0,1)
    std::vector<std::array<std::uint32_t, 3>> points;
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) points.push_back({1, a, b});
    }
    for (std::uint32_t a = 0; a < q; ++a) points.push_back({0, 1, a});
    points.push_back({0, 0, 1});

    SteinerSystem s{points.size(), static_cast<std::size_t>(q) + 1, {}};
    // lines are the same triples read as linear forms
    for (const auto& line : points) {
        Block block;
        for (Vertex i = 0; i < points.size(); ++i) {
            std::uint32_t dot = 0;
            for (int c = 0; c < 3; ++c) dot = field.add(dot, field.mul(line[c], points[i][c]));
            if (dot == 0) block.push_back(i);
        }
        s.blocks.push_back(std::move(block));
    }
    s.canonicalize();
    return s;
}

SteinerSystem affine_plane(std::uint32_t q) {
    const FiniteField field(q);
    auto point = [q](std::uint32_t x, std::uint32_t y) { return static_cast<Vertex>(x * q + y); };
    SteinerSystem s{static_cast<std::size_t>(q) * q, q, {}};
    for (std::uint32_t slope = 0; slope < q; ++slope) {
        for (std::uint32_t offset = 0; offset < q; ++offset) {
            Block block;
            for (std::uint32_t x = 0; x < q; ++x) block.push_back(point(x, field.add(field.mul(slope, x), offset)));
            s.blocks.push_back(std::move(block));
        }
    }
    for (std::uint32_t c = 0; c < q; ++c) {
        Block block;
        for (std::uint32_t y = 0; y < q; ++y) block.push_back(point(c, y));
        s.blocks.push_back(std::move(block));
    }
    s.canonicalize();
    return s;
}

namespace {

class SteinerSearch {
public:
    SteinerSearch(std::size_t n, std::size_t r, std::uint64_t node_limit)
        : n_(n), r_(r), node_limit_(node_limit), covered_(n * n, 0) {}

    std::optional<bool> run() { return extend(); }
    std::vector<Block>& blocks() { return blocks_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool is_covered(Vertex a, Vertex b) const { return covered_[a * n_ + b] != 0; }
    void set_covered(Vertex a, Vertex b, char value) {
        covered_[a * n_ + b] = value;
        covered_[b * n_ + a] = value;
    }

    void toggle(const Block& block, char value) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) set_covered(block[i], block[j], value);
        }
    }

    // true = complete system, false = dead end, nullopt = budget hit
    std::optional<bool> extend() {
        Vertex a = 0;
        Vertex b = 0;
        bool open = false;
        for (a = 0; a < n_ && !open; ++a) {
            for (b = a + 1; b < n_; ++b) {
                if (!is_covered(a, b)) {
                    open = true;
                    break;
                }
            }
        }
        if (!open) return true;
        --a; // undo the loop increment
        Block block{a, b};
        return grow(block, b + 1);
    }

    // Extend block with points from `from` upward whose pairs are all open.
    std::optional<bool> grow(Block& block, Vertex from) {
        if (++nodes_ > node_limit_) return std::nullopt;
        if (block.size() == r_) {
            Block sorted = block;
            std::sort(sorted.begin(), sorted.end());
            toggle(sorted, 1);
            blocks_.push_back(sorted);
            const auto sub = extend();
            if (sub != false) return sub;
            blocks_.pop_back();
            toggle(sorted, 0);
            return false;
        }
        // points below the first open pair's smaller point would reuse a
        // covered pair, so only points > a other than b can join
        for (Vertex c = std::max<Vertex>(from, block[0] + 1); c < n_; ++c) {
            if (c == block[1]) continue;
            bool fits = true;
            for (Vertex x : block) {
                if (is_covered(x, c)) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            block.push_back(c);
            const auto sub = grow(block, c + 1);
            block.pop_back();
            if (sub != false) return sub;
        }
        return false;
    }

    std::size_t n_;
    std::size_t r_;
    std::uint64_t node_limit_;
    std::vector<char> covered_;
    std::vector<Block> blocks_;
    std::uint64_t nodes_ = 0;
};

} // namespace

BruteForceResult brute_force_steiner(std::size_t n, std::size_t r, std::uint64_t node_limit, std::size_t max_points) {
    if (r < 2 || n < r) throw InputError("brute force needs 2 <= r <= n");
    if (n > max_points) {
        throw InputError("brute force is capped at " + std::to_string(max_points) + " points, got " + std::to_string(n));
    }
    SteinerSearch search(n, r, node_limit);
    const auto outcome = search.run();
    BruteForceResult result;
    result.nodes = search.nodes();
    if (!outcome) {
        result.budget_exceeded = true;
    } else if (*outcome) {
        SteinerSystem s{n, r, std::move(search.blocks())};
        s.canonicalize();
        result.system = std::move(s);
    }
    return result;
}

LeviGraph levi_graph(const SteinerSystem& s) {
    if (const auto report = verify_steiner(s); !report.ok) {
        throw InputError("not a Steiner system: " + report.failure);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        for (Vertex p : s.blocks[i]) edges.emplace_back(p, static_cast<Vertex>(s.n + i));
    }
    return LeviGraph{Graph::from_edges(s.n + s.blocks.size(), edges), s};
}

LeviGraph levi_from_graph(const Graph& g, std::size_t point_count) {
    if (point_count > g.vertex_count()) throw InputError("point count exceeds vertex count");
    SteinerSystem s{point_count, 0, {}};
    for (Vertex v = 0; v < point_count; ++v) {
        for (Vertex x : g.neighbors(v)) {
            if (x < point_count) throw InputError("edge between two points " + std::to_string(v) + " and " + std::to_string(x));
        }
    }
    for (auto v = static_cast<Vertex>(point_count); v < g.vertex_count(); ++v) {
        Block block;
        for (Vertex x : g.neighbors(v)) {
            if (x >= point_count) throw InputError("edge between two blocks " + std::to_string(v) + " and " + std::to_string(x));
            block.push_back(x);
        }
        if (s.r == 0) s.r = block.size();
        s.blocks.push_back(std::move(block));
    }
    if (const auto report = verify_steiner(s); !report.ok) {
        throw InputError("graph is not a Levi graph of a Steiner system: " + report.failure);
    }
    // Keep the caller's block numbering: vertex n + i is blocks[i].
    return LeviGraph{g, std::move(s)};
}

} // namespace hued
