#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nearcover/affine.hpp"
#include "nearcover/padic_geometry.hpp"

namespace nearcover {

/// Non-increasing tuple of flat dimensions; entry i prescribes dim(L_i).
struct DimensionVector {
    std::vector<int> entries;

    bool operator==(const DimensionVector&) const = default;
};

/// Sorts entries non-increasing and validates them non-negative.
DimensionVector make_dimension_vector(std::vector<int> entries);

/// Deterministic order on vectors: by length, then lexicographically.
bool vector_order(const DimensionVector& a, const DimensionVector& b);

struct SolveOptions {
    int threads = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool exhausted = false; // set when a negative answer is a completed search
};

/// Witness for a p-adic line cover. Lines are canonical candidate lines
/// covering at least one point each; singleton budget units stand for
/// lines spent on a single point. assignment[i] is a line index, or
/// -(1+s) for singleton s.
struct PadicCertificate {
    int budget = 0;
    std::vector<PadicLine> lines;
    std::vector<PadicPoint> singletons;
    std::vector<int> assignment;
};

/// Witness for a rational cover: each point is assigned to one part and
/// the affine span of part i has dimension at most dims[i]. Parts may be
/// empty.
struct RationalCertificate {
    DimensionVector dims;
    std::vector<std::vector<RatPoint>> parts;
    std::vector<int> assignment;
};

/// Deduplicated union over point pairs of lines_through_pair: every line
/// of the plane containing at least two points of S, each exactly once,
/// in canonical order.
std::vector<PadicLine> candidate_lines(const RingCtx& R, std::span<const PadicPoint> S);

struct PadicCoverResult {
    std::optional<PadicCertificate> cert;
    SearchStats stats;
};

/// Exact decision: is S contained in a union of at most `budget` lines?
PadicCoverResult cover_with_lines(const RingCtx& R, std::span<const PadicPoint> S,
                                  int budget, const SolveOptions& opts = {});

struct MinCoverResult {
    std::optional<int> t_min; // nullopt: exhaustive proof that t_max lines do not suffice
    std::optional<PadicCertificate> cert;
    SearchStats stats;
};

MinCoverResult min_line_cover_padic(const RingCtx& R, std::span<const PadicPoint> S,
                                    int t_max, const SolveOptions& opts = {});

/// Independent brute-force reference: complete search over all lines of
/// the plane (memoized on the uncovered set). Requires p^k <= 27; throws
/// ContextTooLarge beyond that.
std::optional<int> oracle_min_line_cover(const RingCtx& R, std::span<const PadicPoint> S,
                                         int t_max);

struct RationalCoverResult {
    std::optional<RationalCertificate> cert;
    SearchStats stats;
};

/// Exact partition search: assign each point to one of the t parts so
/// that the affine span of part i keeps dimension at most v_i. Over an
/// infinite field this decides coverability by flats of those dimensions.
RationalCoverResult coverable_by_vector(std::span<const RatPoint> S,
                                        const DimensionVector& v,
                                        const SolveOptions& opts = {});

struct VectorSetResult {
    std::optional<DimensionVector> v_used;
    std::optional<RationalCertificate> cert;
    SearchStats stats;
};

/// Tries each vector of V in the deterministic order; first success wins.
VectorSetResult coverable_by_vector_set(std::span<const RatPoint> S,
                                        std::span<const DimensionVector> V,
                                        const SolveOptions& opts = {});

/// Re-verifies a certificate from scratch: incidence of every point with
/// its assigned object, the declared budget, and (when given) that the
/// excluded point lies on no cover object.
bool verify_certificate(const RingCtx& R, std::span<const PadicPoint> S,
                        const PadicCertificate& cert,
                        const PadicPoint* excluded = nullptr);
bool verify_certificate(std::span<const RatPoint> S, const RationalCertificate& cert,
                        const RatPoint* excluded = nullptr);

struct PadicNearCoverReport {
    int budget = 0;
    bool verdict = false;
    bool full_coverable = false;
    std::optional<PadicCertificate> full_cover;
    SearchStats full_stats;
    std::vector<std::optional<PadicCertificate>> deletion_certs; // per point of S
};

/// verdict: S itself has no cover by `t` lines and every single-point
/// deletion has one. Deletions may be checked in parallel; the report is
/// identical for every thread count.
PadicNearCoverReport nearly_covered(const RingCtx& R, std::span<const PadicPoint> S,
                                    int t, const SolveOptions& opts = {});

struct RationalNearCoverReport {
    std::vector<DimensionVector> vectors; // canonical evaluation order
    bool verdict = false;
    bool full_coverable = false;
    std::optional<DimensionVector> full_vector;
    std::optional<RationalCertificate> full_cover;
    SearchStats full_stats;
    std::vector<std::optional<DimensionVector>> deletion_vectors;
    std::vector<std::optional<RationalCertificate>> deletion_certs;
};

RationalNearCoverReport nearly_covered(std::span<const RatPoint> S,
                                       std::span<const DimensionVector> V,
                                       const SolveOptions& opts = {});

} // namespace nearcover
