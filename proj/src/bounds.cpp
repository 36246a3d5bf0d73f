#include "nearcover/bounds.hpp"

namespace nearcover {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw BadParameters("bound overflows 64 bits");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw BadParameters("bound overflows 64 bits");
    return r;
}

} // namespace

std::int64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::int64_t acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        // acc * (n-r+i) is divisible by i at every step
        acc = checked_mul(acc, n - r + i) / i;
    }
    return acc;
}

std::int64_t field_bound(std::int64_t t, std::int64_t k) {
    if (t < 1 || k < 0) throw BadParameters("field bound needs t >= 1, k >= 0");
    return binomial(t + k + 1, k + 1);
}

std::int64_t matroid_bound(std::int64_t t, std::int64_t k) {
    if (t < 1 || k < 0) throw BadParameters("matroid bound needs t >= 1, k >= 0");
    std::int64_t acc = 0, pw = 1;
    for (std::int64_t i = 0; i <= k + 1; ++i) {
        acc = checked_add(acc, pw);
        if (i < k + 1) pw = checked_mul(pw, t);
    }
    return acc;
}

WithZerosBound with_zeros_bound(std::int64_t n, std::int64_t t, std::int64_t s) {
    if (n < 2) throw BadParameters("with-zeros bound needs n >= 2");
    if (s < 0 || s > t) throw BadParameters("need 0 <= s <= t");
    WithZerosBound out;
    out.value = binomial(t + n, n);
    out.t1 = t - s;
    out.t2 = binomial(s + n, n) - 1;
    return out;
}

std::int64_t BoundTable::at(std::int64_t ell, std::int64_t t) const {
    if (ell < 0 || ell > k || t < 0 || t > t_max)
        throw BadParameters("table lookup out of range");
    return f[static_cast<std::size_t>(ell)][static_cast<std::size_t>(t)];
}

BoundTable f_table(std::int64_t k, std::int64_t t_max) {
    if (k < 0 || t_max < 0) throw BadParameters("table needs k >= 0 and t >= 0");
    BoundTable tbl;
    tbl.k = k;
    tbl.t_max = t_max;
    tbl.f.assign(static_cast<std::size_t>(k) + 1,
                 std::vector<std::int64_t>(static_cast<std::size_t>(t_max) + 1, 1));
    for (std::int64_t ell = k - 1; ell >= 0; --ell)
        for (std::int64_t t = 0; t <= t_max; ++t) {
            std::int64_t best = 0;
            for (std::int64_t j = 0; j <= t; ++j) {
                const std::int64_t cand =
                    checked_mul(j + 1, tbl.at(ell + 1, t - j));
                if (cand > best) best = cand;
            }
            tbl.f[static_cast<std::size_t>(ell)][static_cast<std::size_t>(t)] = best;
        }
    return tbl;
}

std::int64_t padic_bound(std::int64_t t, std::int64_t k) {
    if (t < 1 || k < 1) throw BadParameters("p-adic bound needs t >= 1, k >= 1");
    return checked_add(checked_mul(t, f_table(k, t).at(0, t)), 1);
}

std::int64_t ring_length(std::int64_t n) {
    if (n < 2) throw BadParameters("ring length needs n >= 2");
    std::int64_t len = 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            n /= d;
            if (n % d == 0) len = checked_mul(len, d); // p^{e} contributes p^{e-1}
        }
    }
    // leftover n is prime (exponent 1): contributes 1
    return len;
}

} // namespace nearcover
