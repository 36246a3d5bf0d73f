#pragma once

#include <cstdint>
#include <vector>

#include "nearcover/affine.hpp"
#include "nearcover/padic_geometry.hpp"

namespace nearcover {

/// Integer points of the simplex {x_i >= 0, x_1+...+x_n <= t} in Q^n,
/// in lexicographic order; C(t+n, n) points.
std::vector<RatPoint> triangle(int n, int t);

/// Exactly t hyperplanes covering triangle(n,t) minus P and missing P.
std::vector<LinearForm> triangle_deletion_cover(int n, int t, const RatPoint& P);

/// Cover of triangle(n,t) minus P by t-s hyperplanes and C(s+n,n)-1
/// single points, missing P.
struct MissingTriangleCover {
    std::vector<LinearForm> hyperplanes;
    std::vector<RatPoint> extra_points;
};
MissingTriangleCover missing_triangle_cover(int n, int t, int s, const RatPoint& P);

/// The two six-point plane configurations that are nearly covered by two
/// lines; they differ in whether the sixth point closes a second circuit.
struct TightExampleConfigs {
    std::vector<RatPoint> left;
    std::vector<RatPoint> right;
};
TightExampleConfigs tight_example_configs();

/// Parameters for the iterated doubling construction over Z/p^kZ.
struct TowerParams {
    std::int64_t p = 0;
    std::int64_t t = 0;
    std::int64_t k = 0;
    std::int64_t ell = 0;     // scale step
    std::int64_t M = 0;       // iteration count; M*ell <= k-1
    std::int64_t t_prime = 0; // t + M - 1, the near-cover line budget
    std::int64_t r = 0;       // auxiliary prime in (sqrt(p)/4, sqrt(p)/2)
    RingCtx ring;
};

/// Validates 2 <= t < sqrt(p)/4 (which forces p > 64) and k >= 2; picks r
/// as the smallest prime in the open interval (sqrt(p)/4, sqrt(p)/2).
TowerParams tower_params(std::int64_t p, std::int64_t t, std::int64_t k);

/// The skewed shear image of the base triangle {z_i >= 1, z_1+z_2 <= t+1}:
/// C(t+1,2) points with distinct unit first coordinates and second
/// coordinates that are nonzero multiples of p^{k-1}.
std::vector<PadicPoint> flat_triangle(const TowerParams& P);

/// Horizontal translation set of size 2^m: subset sums of p^{ell}, ..., p^{m*ell}.
std::vector<PadicPoint> xi_set(int m, const TowerParams& P);

/// The level-m set of the doubling recursion (sorted); level M is the
/// nearly covered set. Size 2^m * C(t+1,2) + 2^m - 1. The recursion is
/// cross-checked against its closed form at construction time.
std::vector<PadicPoint> padic_tower(const TowerParams& P, int m);

/// The apex point added at level m (1 <= m <= M).
PadicPoint tower_apex(const TowerParams& P, int m);

/// Exactly t+M-1 lines covering padic_tower(P, M) minus x and missing x.
/// Throws PointNotInSet when x is not a tower point; throws logic_error if
/// the constructed cover fails its own incidence check.
std::vector<PadicLine> tower_deletion_cover(const TowerParams& P, PadicPoint x);

} // namespace nearcover
