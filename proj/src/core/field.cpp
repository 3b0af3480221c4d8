#include "hued/field.hpp"

#include <string>
#include <tuple>

#include "hued/errors.hpp"

namespace hued {
namespace {

void trim(Polynomial& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a / b over GF(p); b monic and nonzero.
Polynomial poly_mod(Polynomial a, const Polynomial& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        trim(a);
    }
    return a;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of index.
Polynomial monic_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t degree) {
    Polynomial poly(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        poly[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    poly[degree] = 1;
    return poly;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

Polynomial decode(std::uint32_t value, std::uint32_t p, std::uint32_t e) {
    Polynomial out(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

std::uint32_t encode(const Polynomial& poly, std::uint32_t p) {
    std::uint32_t value = 0;
    for (std::size_t i = poly.size(); i-- > 0;) value = value * p + poly[i];
    return value;
}

} // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) {
    if (q < 2) return std::nullopt;
    std::uint32_t p = 2;
    while (static_cast<std::uint64_t>(p) * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q; // q itself is prime
    std::uint32_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::pair{p, e};
}

bool is_irreducible(const Polynomial& poly, std::uint32_t p) {
    Polynomial f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const auto degree = static_cast<std::uint32_t>(f.size() - 1);
    // normalise to monic
    std::uint32_t lead_inv = 1;
    while ((lead_inv * f.back()) % p != 1) ++lead_inv;
    for (auto& c : f) c = (c * lead_inv) % p;
    for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t i = 0; i < count; ++i) {
            if (poly_mod(f, monic_from_index(i, p, d), p).empty()) return false;
        }
    }
    return true;
}

Polynomial smallest_irreducible(std::uint32_t p, std::uint32_t degree) {
    const std::uint64_t count = ipow(p, degree);
    for (std::uint64_t i = 0; i < count; ++i) {
        Polynomial candidate = monic_from_index(i, p, degree);
        if (is_irreducible(candidate, p)) return candidate;
    }
    throw InvariantError("no irreducible polynomial of degree " + std::to_string(degree) + " over GF(" +
                         std::to_string(p) + ")");
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
    const auto pe = prime_power(q);
    if (!pe || q > kMaxOrder) {
        throw InputError(std::to_string(q) + " is not a prime power in [2, " + std::to_string(kMaxOrder) + "]");
    }
    std::tie(p_, e_) = *pe;
    modulus_ = smallest_irreducible(p_, e_);

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Polynomial pa = decode(a, p_, e_);
        Polynomial na(e_);
        for (std::uint32_t i = 0; i < e_; ++i) na[i] = (p_ - pa[i]) % p_;
        neg_[a] = encode(na, p_);
        for (std::uint32_t b = 0; b < q_; ++b) {
            const Polynomial pb = decode(b, p_, e_);
            Polynomial sum(e_);
            for (std::uint32_t i = 0; i < e_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
            add_[a * q_ + b] = encode(sum, p_);
            mul_[a * q_ + b] = encode(poly_mod(poly_mul(pa, pb, p_), modulus_, p_), p_);
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a) {
        for (std::uint32_t b = 1; b < q_; ++b) {
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] == 0) throw InvariantError("GF(" + std::to_string(q_) + ") element without inverse");
    }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
    if (a == 0 || a >= q_) throw InputError("element has no multiplicative inverse");
    return inv_[a];
}

} // namespace hued
