#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hued {

// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q);

// Coefficients low degree first, over GF(p).
using Polynomial = std::vector<std::uint32_t>;

bool is_irreducible(const Polynomial& poly, std::uint32_t p);

// Smallest monic irreducible of the given degree, comparing the non-leading
// coefficients as base-p digits with c_0 least significant.
Polynomial smallest_irreducible(std::uint32_t p, std::uint32_t degree);

/// GF(p^e) with elements encoded as integers 0..q-1 (base-p digits are the
/// polynomial coefficients). Operations are table lookups.
class FiniteField {
public:
    static constexpr std::uint32_t kMaxOrder = 256;

    // Throws InputError unless q is a prime power in [2, kMaxOrder].
    explicit FiniteField(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return e_; }
    const Polynomial& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    // Throws InputError for 0.
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t q_;
    std::uint32_t p_;
    std::uint32_t e_;
    Polynomial modulus_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> inv_;
};

} // namespace hued
