#pragma once

#include <cstdint>
#include <vector>

#include "nearcover/errors.hpp"

namespace nearcover {

/// Exact binomial C(n, r); throws BadParameters on 64-bit overflow.
std::int64_t binomial(std::int64_t n, std::int64_t r);

/// Largest nearly covered set in affine space over a field: C(t+k+1, k+1)
/// for covers by t flats of dimension at most k.
std::int64_t field_bound(std::int64_t t, std::int64_t k);

/// Matroid analogue: 1 + t + ... + t^{k+1}.
std::int64_t matroid_bound(std::int64_t t, std::int64_t k);

/// Tight value C(t+n, n) for vectors with t-s entries n-1 and
/// C(s+n,n)-1 zeros; reports the split alongside.
struct WithZerosBound {
    std::int64_t value = 0;
    std::int64_t t1 = 0; // hyperplane count, t - s
    std::int64_t t2 = 0; // point count, C(s+n, n) - 1
};
WithZerosBound with_zeros_bound(std::int64_t n, std::int64_t t, std::int64_t s);

/// Memoized table of the cube-splitting recursion
///   f(ell, t) = max_{0 <= j <= t} (j+1) f(ell+1, t-j),   f(k, t) = 1,
/// treated as defining the upper-bound generator with equality.
struct BoundTable {
    std::int64_t k = 0;
    std::int64_t t_max = 0;
    std::vector<std::vector<std::int64_t>> f; // f[ell][t]

    std::int64_t at(std::int64_t ell, std::int64_t t) const;
};
BoundTable f_table(std::int64_t k, std::int64_t t_max);

/// Largest nearly covered set for t lines over Z/p^kZ in the plane:
/// t * f(0, t) + 1.
std::int64_t padic_bound(std::int64_t t, std::int64_t k);

/// Length of the ring Z/nZ: product of p_i^{n_i - 1} over the prime
/// factorization of n.
std::int64_t ring_length(std::int64_t n);

} // namespace nearcover
