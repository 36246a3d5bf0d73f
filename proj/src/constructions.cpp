#include "nearcover/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace nearcover {

namespace {

void emit_simplex(int n, int t, RatPoint& acc, int used, std::vector<RatPoint>& out) {
    if (static_cast<int>(acc.size()) == n) {
        out.push_back(acc);
        return;
    }
    for (int c = 0; c <= t - used; ++c) {
        acc.push_back(Rat(c));
        emit_simplex(n, t, acc, used + c, out);
        acc.pop_back();
    }
}

// Integer coordinates of a lattice point, validated against membership in
// triangle(n,t).
std::vector<int> triangle_coords(int n, int t, const RatPoint& P) {
    if (static_cast<int>(P.size()) != n)
        throw DimensionMismatch("point dimension does not match n");
    std::vector<int> c(n);
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        if (denominator(P[i]) != 1) throw PointNotInTriangle("non-integer point");
        const BigInt v = numerator(P[i]);
        if (v < 0 || v > t) throw PointNotInTriangle("coordinate out of range");
        c[i] = static_cast<int>(v);
        sum += c[i];
    }
    if (sum > t) throw PointNotInTriangle("coordinate sum exceeds t");
    return c;
}

LinearForm axis_form(int n, int axis, int value) {
    LinearForm f;
    f.coeffs.assign(n, Rat(0));
    f.coeffs[axis] = 1;
    f.constant = value;
    return f;
}

LinearForm sum_form(int n, int value) {
    LinearForm f;
    f.coeffs.assign(n, Rat(1));
    f.constant = value;
    return f;
}

RatPoint rat_point(std::initializer_list<Rat> cs) { return RatPoint(cs); }

} // namespace

std::vector<RatPoint> triangle(int n, int t) {
    if (n < 1 || t < 0) throw BadParameters("triangle needs n >= 1 and t >= 0");
    std::vector<RatPoint> out;
    RatPoint acc;
    emit_simplex(n, t, acc, 0, out);
    return out;
}

std::vector<LinearForm> triangle_deletion_cover(int n, int t, const RatPoint& P) {
    const std::vector<int> p = triangle_coords(n, t, P);
    std::vector<LinearForm> cover;
    int sum = 0;
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < p[i]; ++c) cover.push_back(axis_form(n, i, c));
        sum += p[i];
    }
    for (int c = sum + 1; c <= t; ++c) cover.push_back(sum_form(n, c));
    return cover;
}

MissingTriangleCover missing_triangle_cover(int n, int t, int s, const RatPoint& P) {
    if (s < 0 || s > t) throw BadParameters("need 0 <= s <= t");
    const std::vector<int> p = triangle_coords(n, t, P);

    // Anchor a small copy of triangle(n,s) at A so that it contains P and
    // stays inside triangle(n,t): start at A = P and shed coordinate mass
    // until sum(A) <= t - s.
    std::vector<int> a = p;
    long long excess = 0;
    for (int v : p) excess += v;
    excess -= (t - s);
    for (int i = 0; i < n && excess > 0; ++i) {
        const int cut = static_cast<int>(std::min<long long>(a[i], excess));
        a[i] -= cut;
        excess -= cut;
    }

    MissingTriangleCover out;
    int asum = 0;
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < a[i]; ++c) out.hyperplanes.push_back(axis_form(n, i, c));
        asum += a[i];
    }
    for (int c = asum + s + 1; c <= t; ++c) out.hyperplanes.push_back(sum_form(n, c));

    for (const RatPoint& q : triangle(n, s)) {
        RatPoint shifted(n);
        for (int i = 0; i < n; ++i) shifted[i] = q[i] + a[i];
        if (shifted != P) out.extra_points.push_back(std::move(shifted));
    }
    return out;
}

TightExampleConfigs tight_example_configs() {
    TightExampleConfigs cfg;
    cfg.left = {rat_point({0, 0}), rat_point({1, 0}), rat_point({2, 0}),
                rat_point({0, 1}), rat_point({0, 2}),
                rat_point({Rat(2, 3), Rat(2, 3)})};
    cfg.right = {rat_point({0, 0}), rat_point({1, 0}), rat_point({2, 0}),
                 rat_point({0, 1}), rat_point({0, 2}),
                 rat_point({Rat(1, 3), Rat(4, 3)})};
    return cfg;
}

TowerParams tower_params(std::int64_t p, std::int64_t t, std::int64_t k) {
    if (k < 2) throw BadParameters("tower needs k >= 2");
    if (t < 2 || 16 * t * t >= p) throw BadParameters("need 2 <= t < sqrt(p)/4");
    TowerParams P;
    P.p = p;
    P.t = t;
    P.k = k;
    P.ring = make_ring(p, k); // also validates primality and width

    if (k == 2) {
        P.ell = 1;
        P.M = 1;
    } else {
        std::int64_t e = 0, pw = 1;
        while (pw * p <= k) { pw *= p; ++e; } // e = floor(log_p k)
        P.ell = e + 2;
        P.M = (k - 1) / P.ell;
    }
    P.t_prime = t + P.M - 1;

    // smallest prime r with sqrt(p)/4 < r < sqrt(p)/2, exactly:
    // 16 r^2 > p and 4 r^2 < p
    for (std::int64_t r = 2; 4 * r * r < p; ++r) {
        if (16 * r * r > p && is_prime(r)) {
            P.r = r;
            return P;
        }
    }
    throw BadParameters("no auxiliary prime in (sqrt(p)/4, sqrt(p)/2)");
}

namespace {

// Base triangle of the shear construction: {z_1 >= 1, z_2 >= 1, z_1+z_2 <= t+1}.
std::vector<PadicPoint> shear_domain(const TowerParams& P) {
    std::vector<PadicPoint> T;
    for (std::int64_t z1 = 1; z1 <= P.t; ++z1)
        for (std::int64_t z2 = 1; z1 + z2 <= P.t + 1; ++z2)
            T.push_back({z1, z2});
    return T;
}

PadicPoint shear(const TowerParams& P, PadicPoint z) {
    const RingCtx& R = P.ring;
    return {add(R, z.x1, mul(R, P.r, z.x2)), mul(R, pow_p(R, R.k - 1), z.x2)};
}

std::vector<PadicPoint> sorted_unique(std::vector<PadicPoint> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<PadicPoint> flat_triangle(const TowerParams& P) {
    std::vector<PadicPoint> out;
    for (const PadicPoint& z : shear_domain(P)) out.push_back(shear(P, z));
    return sorted_unique(out);
}

std::vector<PadicPoint> xi_set(int m, const TowerParams& P) {
    if (m < 0 || m > P.M) throw BadParameters("xi level out of [0, M]");
    const RingCtx& R = P.ring;
    std::vector<PadicPoint> out{{0, 0}};
    for (int i = 1; i <= m; ++i) {
        const std::int64_t step = pow_p(R, i * P.ell);
        const std::size_t sz = out.size();
        for (std::size_t j = 0; j < sz; ++j)
            out.push_back({add(R, out[j].x1, step), out[j].x2});
    }
    return sorted_unique(out);
}

PadicPoint tower_apex(const TowerParams& P, int m) {
    if (m < 1 || m > P.M) throw BadParameters("apex level out of [1, M]");
    const RingCtx& R = P.ring;
    return {reduce(R, m * P.p), pow_p(R, R.k - m * P.ell - 1)};
}

std::vector<PadicPoint> padic_tower(const TowerParams& P, int m) {
    if (m < 0 || m > P.M) throw BadParameters("tower level out of [0, M]");
    const RingCtx& R = P.ring;

    std::vector<PadicPoint> K = flat_triangle(P);
    for (int j = 1; j <= m; ++j) {
        const std::int64_t step = pow_p(R, j * P.ell);
        const std::size_t sz = K.size();
        for (std::size_t i = 0; i < sz; ++i) K.push_back({add(R, K[i].x1, step), K[i].x2});
        K.push_back(tower_apex(P, j));
        K = sorted_unique(K);
    }

    // closed form: (K_0 + Xi_m)  union_j (apex_j + p^{j*ell} Xi_{m-j})
    std::vector<PadicPoint> closed;
    for (const PadicPoint& base : flat_triangle(P))
        for (const PadicPoint& xi : xi_set(m, P)) closed.push_back(add(R, base, xi));
    for (int j = 1; j <= m; ++j) {
        const PadicPoint a = tower_apex(P, j);
        const std::int64_t scale = pow_p(R, j * P.ell);
        for (const PadicPoint& xi : xi_set(m - j, P))
            closed.push_back({add(R, a.x1, mul(R, scale, xi.x1)), a.x2});
    }
    closed = sorted_unique(closed);
    if (closed != K)
        throw std::logic_error("tower recursion disagrees with its closed form");

    const std::int64_t want =
        (std::int64_t(1) << m) * (P.t * (P.t + 1) / 2) + (std::int64_t(1) << m) - 1;
    if (static_cast<std::int64_t>(K.size()) != want)
        throw std::logic_error("tower size disagrees with its closed form");
    return K;
}

namespace {

// Image of the affine line {a + s*b} under the shear map; always a subset
// of one line of the ring plane.
PadicLine sheared_line(const TowerParams& P, PadicPoint b, PadicPoint a) {
    const RingCtx& R = P.ring;
    const std::int64_t e = add(R, b.x1, mul(R, P.r, b.x2));
    const std::int64_t h = mul(R, pow_p(R, R.k - 1), b.x2);
    const PadicPoint fa = shear(P, a);
    if (e == 0) return line_through(R, Direction{false, 0}, fa);
    const std::int64_t j = valuation(R, e);
    if (j == 0) return line_through(R, canonical_direction(R, e, h), fa);
    const std::int64_t pj = pow_p(R, j);
    return line_through(R, canonical_direction(R, e / pj, h / pj), fa);
}

// t-1 lines covering flat_triangle minus the image of z.
std::vector<PadicLine> base_deletion_cover(const TowerParams& P, PadicPoint z) {
    std::vector<PadicLine> cover;
    for (std::int64_t c = 1; c < z.x1; ++c)
        cover.push_back(sheared_line(P, {0, 1}, {c, 0}));
    for (std::int64_t c = 1; c < z.x2; ++c)
        cover.push_back(sheared_line(P, {1, 0}, {0, c}));
    for (std::int64_t c = z.x1 + z.x2 + 1; c <= P.t + 1; ++c)
        cover.push_back(sheared_line(P, {1, P.ring.modulus - 1}, {c, 0}));
    return cover;
}

std::vector<PadicLine> deletion_cover_rec(const TowerParams& P, int m, PadicPoint x) {
    const RingCtx& R = P.ring;
    if (m == 0) {
        for (const PadicPoint& z : shear_domain(P))
            if (shear(P, z) == x) return base_deletion_cover(P, z);
        throw std::logic_error("deleted point not in the base triangle image");
    }

    if (x == tower_apex(P, m)) {
        // All of level m minus the apex lies on horizontal rows.
        std::vector<PadicLine> cover;
        for (std::int64_t j = 1; j <= P.t; ++j)
            cover.push_back(line_through(R, Direction{true, 0},
                                         {0, mul(R, j, pow_p(R, R.k - 1))}));
        for (std::int64_t j = 1; j <= m - 1; ++j)
            cover.push_back(line_through(R, Direction{true, 0},
                                         {0, pow_p(R, R.k - j * P.ell - 1)}));
        return cover;
    }

    // x sits in one of the two translated copies of level m-1; its companion
    // is picked up by a line through the level-m apex, and the recursive
    // cover of level m-1 covers both copies because all of its lines have
    // period (p^{m*ell}, 0).
    const std::vector<PadicPoint> prev = padic_tower(P, m - 1);
    const std::int64_t step = pow_p(R, m * P.ell);
    PadicPoint y, companion;
    if (std::binary_search(prev.begin(), prev.end(), x)) {
        y = x;
        companion = add(R, x, {step, 0});
    } else {
        y = sub(R, x, {step, 0});
        if (!std::binary_search(prev.begin(), prev.end(), y))
            throw std::logic_error("deleted point not in either copy");
        companion = y;
    }
    std::vector<PadicLine> cover = deletion_cover_rec(P, m - 1, y);
    cover.push_back(lines_through_pair(R, tower_apex(P, m), companion).front());
    return cover;
}

} // namespace

std::vector<PadicLine> tower_deletion_cover(const TowerParams& P, PadicPoint x) {
    const RingCtx& R = P.ring;
    x = reduce(R, x);
    const std::vector<PadicPoint> K = padic_tower(P, static_cast<int>(P.M));
    if (!std::binary_search(K.begin(), K.end(), x))
        throw PointNotInSet("point is not in the tower set");

    std::vector<PadicLine> cover = deletion_cover_rec(P, static_cast<int>(P.M), x);

    if (static_cast<std::int64_t>(cover.size()) != P.t_prime)
        throw std::logic_error("tower deletion cover has the wrong line count");
    for (const PadicPoint& q : K) {
        bool hit = false;
        for (const PadicLine& L : cover)
            if (line_contains(R, L, q)) { hit = true; break; }
        if (q == x ? hit : !hit)
            throw std::logic_error("tower deletion cover fails its incidence check");
    }
    return cover;
}

} // namespace nearcover
