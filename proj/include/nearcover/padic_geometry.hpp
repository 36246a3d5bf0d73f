#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "nearcover/ring.hpp"

namespace nearcover {

struct PadicPoint {
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;

    auto operator<=>(const PadicPoint&) const = default;
};

inline PadicPoint reduce(const RingCtx& R, PadicPoint a) {
    return {reduce(R, a.x1), reduce(R, a.x2)};
}

inline PadicPoint add(const RingCtx& R, PadicPoint a, PadicPoint b) {
    return {add(R, a.x1, b.x1), add(R, a.x2, b.x2)};
}

inline PadicPoint sub(const RingCtx& R, PadicPoint a, PadicPoint b) {
    return {sub(R, a.x1, b.x1), sub(R, a.x2, b.x2)};
}

std::int64_t pdist_scale(const RingCtx& R, PadicPoint a, PadicPoint b);

/// Canonical projective direction: either (1, param) with param in [0, p^k),
/// or (param, 1) with p | param. Exactly one representative per class.
struct Direction {
    bool unit_first = true; // true: (1, param); false: (param, 1)
    std::int64_t param = 0;

    auto operator<=>(const Direction&) const = default;
};

inline std::int64_t dir_c1(const Direction& d) { return d.unit_first ? 1 : d.param; }
inline std::int64_t dir_c2(const Direction& d) { return d.unit_first ? d.param : 1; }

/// Canonicalizes (b1, b2); throws NotADirection if both coordinates are
/// divisible by p.
Direction canonical_direction(const RingCtx& R, std::int64_t b1, std::int64_t b2);

/// Angle between directions as a scale: angle = p^{-scale}, scale in [0, k].
/// Exact minimum over unit multiples.
std::int64_t angle_scale(const RingCtx& R, Direction b, Direction c);

/// Angle with the horizontal direction (1,0): valuation(param) for a
/// (1,u) direction, 0 for a (w,1) direction.
std::int64_t slope_scale(const RingCtx& R, Direction b);

/// Line {base + s*dir} in canonical position: for dir (1,u) the base is
/// (0,c), for dir (w,1) it is (c,0). Structural equality is point-set
/// equality.
struct PadicLine {
    Direction dir;
    PadicPoint base;

    auto operator<=>(const PadicLine&) const = default;
};

/// The canonical line with direction d through point a.
PadicLine line_through(const RingCtx& R, Direction d, PadicPoint a);

bool line_contains(const RingCtx& R, const PadicLine& L, PadicPoint x);

/// All p^k points of L, in parameter order.
std::vector<PadicPoint> line_points(const RingCtx& R, const PadicLine& L);

inline std::int64_t slope_scale(const RingCtx& R, const PadicLine& L) {
    return slope_scale(R, L.dir);
}

/// All distinct lines containing both points; exactly p^{pdist_scale(a,b)}
/// of them, sorted canonically. Throws SamePoint when a == b.
std::vector<PadicLine> lines_through_pair(const RingCtx& R, PadicPoint a, PadicPoint b);

/// Exact intersection point set, sorted.
std::vector<PadicPoint> line_intersection(const RingCtx& R, const PadicLine& L,
                                          const PadicLine& M);

/// Ball {y : |center - y|_p <= p^{-scale}}; center stored reduced mod p^scale.
struct Cube {
    std::int64_t scale = 0;
    PadicPoint center;

    auto operator<=>(const Cube&) const = default;
};

Cube make_cube(const RingCtx& R, std::int64_t scale, PadicPoint x);

bool cube_contains(const RingCtx& R, const Cube& Q, PadicPoint x);

/// The image of Q cap L in the rescaled ring Z/p^{k-scale}Z, as a line
/// there; nullopt when the intersection is empty. Cube scale must be < k.
struct RescaledLine {
    RingCtx sub;
    PadicLine line;
};
std::optional<RescaledLine> cube_rescale(const RingCtx& R, const Cube& Q,
                                         const PadicLine& L);

/// Enumeration helpers: every canonical direction / line of the plane.
std::vector<Direction> all_directions(const RingCtx& R);
std::vector<PadicLine> all_lines(const RingCtx& R);

} // namespace nearcover
