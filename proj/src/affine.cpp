#include "nearcover/affine.hpp"

#include <algorithm>

namespace nearcover {

namespace {

void require_dim(std::size_t n, const RatPoint& x) {
    if (x.size() != n) throw DimensionMismatch("mixed ambient dimensions");
}

// Rank of an integer matrix by Bareiss fraction-free elimination with full
// pivot search; all divisions are exact.
int bareiss_rank(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<BigInt> cleared_row(const RatPoint& from, const RatPoint& to) {
    BigInt scale = 1;
    for (std::size_t j = 0; j < from.size(); ++j)
        scale = boost::multiprecision::lcm(scale, denominator(Rat(to[j] - from[j])));
    std::vector<BigInt> row(from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        const Rat d = to[j] - from[j];
        row[j] = numerator(d) * (scale / denominator(d));
    }
    return row;
}

} // namespace

bool form_contains(const LinearForm& f, const RatPoint& x) {
    require_dim(f.coeffs.size(), x);
    Rat acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += f.coeffs[i] * x[i];
    return acc == f.constant;
}

int affine_dim(std::span<const RatPoint> points) {
    if (points.empty()) return -1;
    const std::size_t n = points[0].size();
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        require_dim(n, points[i]);
        rows.push_back(cleared_row(points[0], points[i]));
    }
    return bareiss_rank(std::move(rows));
}

AffineFlat make_flat(std::vector<RatPoint> spanning) {
    if (spanning.empty()) throw BadParameters("flat needs at least one spanning point");
    const int d = affine_dim(spanning);
    return AffineFlat{std::move(spanning), d};
}

bool flat_contains(const AffineFlat& F, const RatPoint& x) {
    if (F.spanning.empty()) return false;
    require_dim(F.spanning[0].size(), x);
    std::vector<RatPoint> aug = F.spanning;
    aug.push_back(x);
    return affine_dim(aug) == F.dim;
}

AffineFlat hyperplane_flat(const LinearForm& f, int n) {
    if (static_cast<int>(f.coeffs.size()) != n)
        throw DimensionMismatch("form does not match ambient dimension");
    int j = -1;
    for (int i = 0; i < n; ++i)
        if (f.coeffs[i] != 0) { j = i; break; }
    if (j < 0) throw BadParameters("zero linear form is not a hyperplane");

    RatPoint base(n, Rat(0));
    base[j] = f.constant / f.coeffs[j];
    std::vector<RatPoint> span{base};
    for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        RatPoint q = base;
        q[i] += 1;
        q[j] -= f.coeffs[i] / f.coeffs[j];
        span.push_back(std::move(q));
    }
    return make_flat(std::move(span));
}

bool element_contains(const CoverElement& e, const RatPoint& x) {
    if (const auto* f = std::get_if<LinearForm>(&e)) return form_contains(*f, x);
    return flat_contains(std::get<AffineFlat>(e), x);
}

bool verify_affine_cover(std::span<const RatPoint> S,
                         std::span<const CoverElement> cover,
                         const RatPoint* excluded) {
    for (const RatPoint& x : S) {
        bool hit = false;
        for (const CoverElement& e : cover)
            if (element_contains(e, x)) { hit = true; break; }
        if (!hit) return false;
    }
    if (excluded)
        for (const CoverElement& e : cover)
            if (element_contains(e, *excluded)) return false;
    return true;
}

} // namespace nearcover
