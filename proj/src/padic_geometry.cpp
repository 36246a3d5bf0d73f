#include "nearcover/padic_geometry.hpp"

#include <algorithm>
#include <array>

namespace nearcover {

std::int64_t pdist_scale(const RingCtx& R, PadicPoint a, PadicPoint b) {
    const std::array<std::int64_t, 2> x{a.x1, a.x2}, y{b.x1, b.x2};
    return pdist_scale(R, x, y);
}

Direction canonical_direction(const RingCtx& R, std::int64_t b1, std::int64_t b2) {
    b1 = reduce(R, b1);
    b2 = reduce(R, b2);
    if (is_unit(R, b1)) return Direction{true, mul(R, b2, inv_unit(R, b1))};
    if (is_unit(R, b2)) return Direction{false, mul(R, b1, inv_unit(R, b2))};
    throw NotADirection("both coordinates divisible by p");
}

std::int64_t angle_scale(const RingCtx& R, Direction b, Direction c) {
    // Mixed canonical forms are at angle 1. Within one form the angle is
    // the p-adic distance of the parameters: any unit multiple r with
    // val(1-r) = j changes the parameter by a multiple of p^{j+1}, so
    // r = 1 realizes the minimum.
    if (b.unit_first != c.unit_first) return 0;
    return valuation(R, sub(R, b.param, c.param));
}

std::int64_t slope_scale(const RingCtx& R, Direction b) {
    return b.unit_first ? valuation(R, b.param) : 0;
}

PadicLine line_through(const RingCtx& R, Direction d, PadicPoint a) {
    a = reduce(R, a);
    if (d.unit_first) {
        // base where the first coordinate vanishes: s = -a.x1
        return PadicLine{d, PadicPoint{0, sub(R, a.x2, mul(R, a.x1, d.param))}};
    }
    return PadicLine{d, PadicPoint{sub(R, a.x1, mul(R, a.x2, d.param)), 0}};
}

bool line_contains(const RingCtx& R, const PadicLine& L, PadicPoint x) {
    x = reduce(R, x);
    if (L.dir.unit_first)
        return x.x2 == add(R, L.base.x2, mul(R, x.x1, L.dir.param));
    return x.x1 == add(R, L.base.x1, mul(R, x.x2, L.dir.param));
}

std::vector<PadicPoint> line_points(const RingCtx& R, const PadicLine& L) {
    std::vector<PadicPoint> pts;
    pts.reserve(static_cast<std::size_t>(R.modulus));
    for (std::int64_t s = 0; s < R.modulus; ++s) {
        if (L.dir.unit_first)
            pts.push_back({s, add(R, L.base.x2, mul(R, s, L.dir.param))});
        else
            pts.push_back({add(R, L.base.x1, mul(R, s, L.dir.param)), s});
    }
    return pts;
}

std::vector<PadicLine> lines_through_pair(const RingCtx& R, PadicPoint a, PadicPoint b) {
    a = reduce(R, a);
    b = reduce(R, b);
    if (a == b) throw SamePoint("pair of distinct points required");
    const PadicPoint d = sub(R, b, a);
    const std::int64_t ell = pdist_scale(R, a, b); // in [0, k-1]
    const std::int64_t pl = pow_p(R, ell);
    const std::int64_t e1 = d.x1 / pl, e2 = d.x2 / pl; // primitive difference
    const std::int64_t step = pow_p(R, R.k - ell);

    // Directions through the pair are the unit multiples of (e1,e2) modulo
    // p^{k-ell}; in canonical form that is one parameter residue class.
    std::vector<PadicLine> out;
    out.reserve(static_cast<std::size_t>(pl));
    if (is_unit(R, e1)) {
        const std::int64_t u0 = mul(R, e2, inv_unit(R, e1));
        for (std::int64_t t = 0; t < pl; ++t)
            out.push_back(line_through(R, Direction{true, add(R, u0, t * step)}, a));
    } else {
        const std::int64_t w0 = mul(R, e1, inv_unit(R, e2));
        for (std::int64_t t = 0; t < pl; ++t)
            out.push_back(line_through(R, Direction{false, add(R, w0, t * step)}, a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PadicPoint> line_intersection(const RingCtx& R, const PadicLine& L,
                                          const PadicLine& M) {
    std::vector<PadicPoint> out;
    for (const PadicPoint& x : line_points(R, L))
        if (line_contains(R, M, x)) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cube make_cube(const RingCtx& R, std::int64_t scale, PadicPoint x) {
    if (scale < 0 || scale > R.k) throw BadParameters("cube scale out of [0,k]");
    const std::int64_t q = pow_p(R, scale);
    x = reduce(R, x);
    return Cube{scale, PadicPoint{x.x1 % q, x.x2 % q}};
}

bool cube_contains(const RingCtx& R, const Cube& Q, PadicPoint x) {
    const std::int64_t q = pow_p(R, Q.scale);
    x = reduce(R, x);
    return x.x1 % q == Q.center.x1 && x.x2 % q == Q.center.x2;
}

std::optional<RescaledLine> cube_rescale(const RingCtx& R, const Cube& Q,
                                         const PadicLine& L) {
    if (Q.scale < 0 || Q.scale >= R.k)
        throw BadParameters("rescaling needs cube scale in [0,k)");
    if (Q.scale == 0) return RescaledLine{R, L};

    const std::int64_t q = pow_p(R, Q.scale);
    // Solve base + s*dir = center (mod p^scale); the unit coordinate of the
    // direction pins s mod p^scale, the other coordinate decides membership.
    std::int64_t s0;
    if (L.dir.unit_first) {
        s0 = ((Q.center.x1 - L.base.x1) % q + q) % q;
        if ((L.base.x2 + s0 * L.dir.param - Q.center.x2) % q != 0) return std::nullopt;
    } else {
        s0 = ((Q.center.x2 - L.base.x2) % q + q) % q;
        if ((L.base.x1 + s0 * L.dir.param - Q.center.x1) % q != 0) return std::nullopt;
    }

    const RingCtx sub = make_ring(R.p, R.k - Q.scale);
    PadicPoint hit;
    if (L.dir.unit_first)
        hit = PadicPoint{s0, add(R, L.base.x2, mul(R, s0, L.dir.param))};
    else
        hit = PadicPoint{add(R, L.base.x1, mul(R, s0, L.dir.param)), s0};
    const PadicPoint scaled{(hit.x1 - Q.center.x1) / q, (hit.x2 - Q.center.x2) / q};
    const Direction d =
        canonical_direction(sub, reduce(sub, dir_c1(L.dir)), reduce(sub, dir_c2(L.dir)));
    return RescaledLine{sub, line_through(sub, d, reduce(sub, scaled))};
}

std::vector<Direction> all_directions(const RingCtx& R) {
    std::vector<Direction> out;
    out.reserve(static_cast<std::size_t>(R.modulus + R.modulus / R.p));
    for (std::int64_t u = 0; u < R.modulus; ++u) out.push_back({true, u});
    for (std::int64_t v = 0; v < R.modulus / R.p; ++v) out.push_back({false, v * R.p});
    return out;
}

std::vector<PadicLine> all_lines(const RingCtx& R) {
    std::vector<PadicLine> out;
    for (const Direction& d : all_directions(R))
        for (std::int64_t c = 0; c < R.modulus; ++c)
            out.push_back(d.unit_first ? PadicLine{d, PadicPoint{0, c}}
                                       : PadicLine{d, PadicPoint{c, 0}});
    return out;
}

} // namespace nearcover
