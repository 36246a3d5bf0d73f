#include "nearcover/ring.hpp"

#include <limits>

namespace nearcover {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

RingCtx make_ring(std::int64_t p, std::int64_t k) {
    if (!is_prime(p)) throw BadParameters("ring modulus base must be prime");
    if (k < 1) throw BadParameters("ring needs at least one scale");
    constexpr std::int64_t cap = std::int64_t(1) << 31;
    std::int64_t m = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (m >= (cap + p - 1) / p) throw BadParameters("p^k must stay below 2^31");
        m *= p;
    }
    if (m >= cap) throw BadParameters("p^k must stay below 2^31");
    return RingCtx{p, k, m};
}

std::int64_t pow_p(const RingCtx& R, std::int64_t e) {
    if (e < 0 || e > R.k) throw BadParameters("p-power exponent out of [0,k]");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= R.p;
    return r;
}

bool is_unit(const RingCtx& R, std::int64_t a) {
    return reduce(R, a) % R.p != 0;
}

std::int64_t inv_unit(const RingCtx& R, std::int64_t a) {
    a = reduce(R, a);
    if (a % R.p == 0) throw BadParameters("inverse of a non-unit");
    // extended Euclid on (a, modulus)
    std::int64_t r0 = a, r1 = R.modulus, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce(R, s0);
}

std::int64_t valuation(const RingCtx& R, std::int64_t a) {
    a = reduce(R, a);
    if (a == 0) return R.k;
    std::int64_t v = 0;
    while (a % R.p == 0) {
        a /= R.p;
        ++v;
    }
    return v;
}

std::int64_t pdist_scale(const RingCtx& R, std::span<const std::int64_t> x,
                         std::span<const std::int64_t> y) {
    if (x.size() != y.size() || x.empty())
        throw DimensionMismatch("distance needs matching nonempty coordinates");
    std::int64_t best = R.k;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t v = valuation(R, sub(R, x[i], y[i]));
        if (v < best) best = v;
    }
    return best;
}

} // namespace nearcover
