#pragma once

#include <cstdint>
#include <span>

#include "nearcover/errors.hpp"

namespace nearcover {

/// The ring Z/p^kZ. All residues are int64_t values in [0, modulus).
/// modulus is capped below 2^31 so that any product of two residues
/// fits in int64_t without overflow.
struct RingCtx {
    std::int64_t p = 0;
    std::int64_t k = 0;
    std::int64_t modulus = 0;

    bool operator==(const RingCtx&) const = default;
};

/// Validates p prime, k >= 1, p^k < 2^31; precomputes the modulus.
RingCtx make_ring(std::int64_t p, std::int64_t k);

bool is_prime(std::int64_t n);

inline std::int64_t reduce(const RingCtx& R, std::int64_t a) {
    std::int64_t r = a % R.modulus;
    return r < 0 ? r + R.modulus : r;
}

inline std::int64_t add(const RingCtx& R, std::int64_t a, std::int64_t b) {
    return reduce(R, a + b);
}

inline std::int64_t sub(const RingCtx& R, std::int64_t a, std::int64_t b) {
    return reduce(R, a - b);
}

inline std::int64_t mul(const RingCtx& R, std::int64_t a, std::int64_t b) {
    return reduce(R, reduce(R, a) * reduce(R, b));
}

/// p^e for 0 <= e <= k.
std::int64_t pow_p(const RingCtx& R, std::int64_t e);

bool is_unit(const RingCtx& R, std::int64_t a);

/// Inverse of a unit; throws BadParameters on non-units.
std::int64_t inv_unit(const RingCtx& R, std::int64_t a);

/// Largest j in [0,k] with p^j | a; valuation(0) = k by convention.
std::int64_t valuation(const RingCtx& R, std::int64_t a);

/// min over coordinates of valuation(x_i - y_i); works in any dimension.
std::int64_t pdist_scale(const RingCtx& R, std::span<const std::int64_t> x,
                         std::span<const std::int64_t> y);

} // namespace nearcover
