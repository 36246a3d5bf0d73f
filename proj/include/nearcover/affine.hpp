#pragma once

#include <span>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nearcover/errors.hpp"

namespace nearcover {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Point of Q^n with exact arbitrary-precision coordinates.
using RatPoint = std::vector<Rat>;

/// Hyperplane {x : coeffs . x = constant}; not all coefficients zero.
struct LinearForm {
    std::vector<Rat> coeffs;
    Rat constant;
};

bool form_contains(const LinearForm& f, const RatPoint& x);

/// Flat given by a spanning point list; the flat is their affine span.
struct AffineFlat {
    std::vector<RatPoint> spanning;
    int dim = -1;
};

/// -1 for empty input, 0 for a single point, else the rank of the
/// difference set, computed by fraction-free (Bareiss) elimination on
/// denominator-cleared rows.
int affine_dim(std::span<const RatPoint> points);

AffineFlat make_flat(std::vector<RatPoint> spanning);

bool flat_contains(const AffineFlat& F, const RatPoint& x);

/// n affinely independent points spanning the hyperplane of f in Q^n.
AffineFlat hyperplane_flat(const LinearForm& f, int n);

using CoverElement = std::variant<LinearForm, AffineFlat>;

bool element_contains(const CoverElement& e, const RatPoint& x);

/// True iff every point of S lies on at least one cover element and the
/// excluded point (when given) lies on none.
bool verify_affine_cover(std::span<const RatPoint> S,
                         std::span<const CoverElement> cover,
                         const RatPoint* excluded = nullptr);

} // namespace nearcover
