#include "nearcover/solver.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nearcover {

DimensionVector make_dimension_vector(std::vector<int> entries) {
    for (int e : entries)
        if (e < 0) throw BadParameters("dimension vector entries must be >= 0");
    std::sort(entries.begin(), entries.end(), std::greater<int>());
    return DimensionVector{std::move(entries)};
}

bool vector_order(const DimensionVector& a, const DimensionVector& b) {
    if (a.entries.size() != b.entries.size())
        return a.entries.size() < b.entries.size();
    return a.entries < b.entries;
}

namespace {

// One part of the partition: anchor point plus an echelon basis of
// differences, so feasibility of a new point is a single reduction.
struct Part {
    int anchor = -1;
    std::vector<int> members;
    std::vector<std::vector<Rat>> basis;
    std::vector<int> pivots;

    int dim() const { return anchor < 0 ? -1 : static_cast<int>(basis.size()); }
};

struct Search {
    std::span<const RatPoint> pts;
    const DimensionVector* v = nullptr;
    std::vector<Part> parts;
    std::vector<int> assigned; // point -> part, or -1
    std::uint64_t nodes = 0;
};

std::vector<Rat> reduce_row(const Part& P, std::vector<Rat> x) {
    for (std::size_t r = 0; r < P.basis.size(); ++r) {
        const int c = P.pivots[r];
        if (x[static_cast<std::size_t>(c)] == 0) continue;
        const Rat f = x[static_cast<std::size_t>(c)] / P.basis[r][static_cast<std::size_t>(c)];
        for (std::size_t j = 0; j < x.size(); ++j) x[j] -= f * P.basis[r][j];
    }
    return x;
}

int leading_col(const std::vector<Rat>& x) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) return static_cast<int>(j);
    return -1;
}

// Open-part symmetry: a point may start only the first empty part among
// parts sharing the same prescribed dimension.
bool may_open(const Search& st, std::size_t part) {
    for (std::size_t j = 0; j < part; ++j)
        if (st.v->entries[j] == st.v->entries[part] && st.parts[j].anchor < 0)
            return false;
    return true;
}

// -1: infeasible; 0: fits with no rank increase; 1: fits, rank grows.
int classify(const Search& st, std::size_t part, std::size_t pt,
             std::vector<Rat>* residual_out) {
    const Part& P = st.parts[part];
    if (P.anchor < 0) return may_open(st, part) ? 1 : -1;
    std::vector<Rat> diff(st.pts[pt].size());
    for (std::size_t j = 0; j < diff.size(); ++j)
        diff[j] = st.pts[pt][j] - st.pts[static_cast<std::size_t>(P.anchor)][j];
    std::vector<Rat> res = reduce_row(P, std::move(diff));
    if (leading_col(res) < 0) return 0;
    if (P.dim() + 1 > st.v->entries[part]) return -1;
    if (residual_out) *residual_out = std::move(res);
    return 1;
}

bool dfs(Search& st) {
    ++st.nodes;
    // fail-first: unassigned point with the fewest feasible parts
    std::size_t best_pt = st.pts.size();
    int best_cnt = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < st.pts.size(); ++i) {
        if (st.assigned[i] >= 0) continue;
        int cnt = 0;
        for (std::size_t p = 0; p < st.parts.size(); ++p)
            if (classify(st, p, i, nullptr) >= 0) ++cnt;
        if (cnt < best_cnt) {
            best_cnt = cnt;
            best_pt = i;
        }
        if (cnt == 0) break;
    }
    if (best_pt == st.pts.size()) return true; // all assigned
    if (best_cnt == 0) return false;

    for (std::size_t p = 0; p < st.parts.size(); ++p) {
        std::vector<Rat> residual;
        const int cls = classify(st, p, best_pt, &residual);
        if (cls < 0) continue;
        Part& part = st.parts[p];
        const bool was_empty = part.anchor < 0;
        bool grew = false;
        if (was_empty) {
            part.anchor = static_cast<int>(best_pt);
        } else if (cls == 1) {
            part.pivots.push_back(leading_col(residual));
            part.basis.push_back(std::move(residual));
            grew = true;
        }
        part.members.push_back(static_cast<int>(best_pt));
        st.assigned[best_pt] = static_cast<int>(p);

        if (dfs(st)) return true;

        st.assigned[best_pt] = -1;
        part.members.pop_back();
        if (was_empty) part.anchor = -1;
        if (grew) {
            part.basis.pop_back();
            part.pivots.pop_back();
        }
    }
    return false;
}

RationalCertificate assemble(const Search& st) {
    RationalCertificate cert;
    cert.dims = *st.v;
    cert.parts.resize(st.parts.size());
    for (std::size_t p = 0; p < st.parts.size(); ++p)
        for (int i : st.parts[p].members)
            cert.parts[p].push_back(st.pts[static_cast<std::size_t>(i)]);
    cert.assignment.assign(st.assigned.begin(), st.assigned.end());
#ifndef NDEBUG
    if (!verify_certificate(st.pts, cert)) std::abort();
#endif
    return cert;
}

} // namespace

RationalCoverResult coverable_by_vector(std::span<const RatPoint> S,
                                        const DimensionVector& v, const SolveOptions&) {
    for (std::size_t i = 1; i < v.entries.size(); ++i)
        if (v.entries[i - 1] < v.entries[i])
            throw BadParameters("dimension vector must be non-increasing");
    if (!S.empty())
        for (const RatPoint& x : S)
            if (x.size() != S[0].size())
                throw DimensionMismatch("mixed ambient dimensions");

    RationalCoverResult res;
    if (S.empty()) {
        RationalCertificate cert;
        cert.dims = v;
        cert.parts.assign(v.entries.size(), {});
        res.cert = std::move(cert);
        res.stats.nodes = 1;
        return res;
    }
    if (v.entries.empty()) {
        res.stats.nodes = 1;
        res.stats.exhausted = true;
        return res;
    }

    Search st;
    st.pts = S;
    st.v = &v;
    st.parts.assign(v.entries.size(), {});
    st.assigned.assign(S.size(), -1);
    if (dfs(st)) {
        res.cert = assemble(st);
    } else {
        res.stats.exhausted = true;
    }
    res.stats.nodes = st.nodes;
    return res;
}

VectorSetResult coverable_by_vector_set(std::span<const RatPoint> S,
                                        std::span<const DimensionVector> V,
                                        const SolveOptions& opts) {
    std::vector<DimensionVector> order(V.begin(), V.end());
    std::sort(order.begin(), order.end(), vector_order);
    order.erase(std::unique(order.begin(), order.end()), order.end());

    VectorSetResult res;
    for (const DimensionVector& v : order) {
        RationalCoverResult r = coverable_by_vector(S, v, opts);
        res.stats.nodes += r.stats.nodes;
        if (r.cert) {
            res.v_used = v;
            res.cert = std::move(r.cert);
            return res;
        }
    }
    res.stats.exhausted = true;
    return res;
}

bool verify_certificate(std::span<const RatPoint> S, const RationalCertificate& cert,
                        const RatPoint* excluded) {
    if (cert.parts.size() != cert.dims.entries.size()) return false;
    if (cert.assignment.size() != S.size()) return false;

    std::vector<AffineFlat> flats;
    for (std::size_t p = 0; p < cert.parts.size(); ++p) {
        if (cert.parts[p].empty()) {
            flats.push_back(AffineFlat{});
            continue;
        }
        AffineFlat f = make_flat(cert.parts[p]);
        if (f.dim > cert.dims.entries[p]) return false;
        flats.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
        const int a = cert.assignment[i];
        if (a < 0 || a >= static_cast<int>(flats.size())) return false;
        if (flats[static_cast<std::size_t>(a)].spanning.empty()) return false;
        if (!flat_contains(flats[static_cast<std::size_t>(a)], S[i])) return false;
    }
    if (excluded) {
        for (const AffineFlat& f : flats)
            if (!f.spanning.empty() && flat_contains(f, *excluded)) return false;
    }
    return true;
}

RationalNearCoverReport nearly_covered(std::span<const RatPoint> S,
                                       std::span<const DimensionVector> V,
                                       const SolveOptions& opts) {
    RationalNearCoverReport rep;
    rep.vectors.assign(V.begin(), V.end());
    std::sort(rep.vectors.begin(), rep.vectors.end(), vector_order);
    rep.vectors.erase(std::unique(rep.vectors.begin(), rep.vectors.end()),
                      rep.vectors.end());

    VectorSetResult full = coverable_by_vector_set(S, rep.vectors, opts);
    rep.full_coverable = full.cert.has_value();
    rep.full_vector = full.v_used;
    rep.full_cover = std::move(full.cert);
    rep.full_stats = full.stats;

    rep.deletion_vectors.assign(S.size(), std::nullopt);
    rep.deletion_certs.assign(S.size(), std::nullopt);
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.threads)) \
    if (opts.threads > 1)
#endif
    for (std::size_t i = 0; i < S.size(); ++i) {
        try {
            std::vector<RatPoint> rest;
            rest.reserve(S.size() - 1);
            for (std::size_t j = 0; j < S.size(); ++j)
                if (j != i) rest.push_back(S[j]);
            VectorSetResult d = coverable_by_vector_set(rest, rep.vectors, {});
            rep.deletion_vectors[i] = d.v_used;
            rep.deletion_certs[i] = std::move(d.cert);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    rep.verdict = !rep.full_coverable;
    for (const auto& c : rep.deletion_certs)
        if (!c) rep.verdict = false;
    return rep;
}

} // namespace nearcover
