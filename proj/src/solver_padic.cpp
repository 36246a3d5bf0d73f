#include "nearcover/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nearcover {

namespace {

// ---------------------------------------------------------------------
// small dynamic bitset over point indices
// ---------------------------------------------------------------------

struct Mask {
    std::vector<std::uint64_t> w;

    static Mask full(std::size_t n) {
        Mask m;
        m.w.assign((n + 63) / 64, 0);
        for (std::size_t i = 0; i < n; ++i) m.set(i);
        return m;
    }
    static Mask empty_like(const Mask& o) {
        Mask m;
        m.w.assign(o.w.size(), 0);
        return m;
    }
    void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    void clear(std::size_t i) { w[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    void subtract(const Mask& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
};

// ---------------------------------------------------------------------
// shared, read-only description of one cover instance
// ---------------------------------------------------------------------

struct Instance {
    const RingCtx* R = nullptr;
    std::vector<PadicPoint> pts;
    std::vector<PadicLine> cands;
    std::vector<Mask> cand_mask;
    std::vector<std::vector<int>> through; // point index -> candidate indices
    int max_cover = 1;                     // most points of S on one candidate
};

Instance build_instance(const RingCtx& R, std::span<const PadicPoint> S) {
    Instance ins;
    ins.R = &R;
    ins.pts.assign(S.begin(), S.end());
    ins.cands = candidate_lines(R, S);
    ins.cand_mask.reserve(ins.cands.size());
    ins.through.assign(ins.pts.size(), {});
    for (std::size_t c = 0; c < ins.cands.size(); ++c) {
        Mask m = Mask::full(ins.pts.size());
        m.w.assign(m.w.size(), 0);
        int cover = 0;
        for (std::size_t i = 0; i < ins.pts.size(); ++i) {
            if (line_contains(R, ins.cands[c], ins.pts[i])) {
                m.set(i);
                ins.through[i].push_back(static_cast<int>(c));
                ++cover;
            }
        }
        ins.cand_mask.push_back(std::move(m));
        ins.max_cover = std::max(ins.max_cover, cover);
    }
    return ins;
}

// ---------------------------------------------------------------------
// depth-first search with earlier-sibling banning
// ---------------------------------------------------------------------

struct Node {
    Mask uncovered;
    int budget_left = 0;
    std::vector<int> chosen;  // candidate indices in pick order
    std::vector<int> singles; // point indices carried by singleton lines
    std::vector<char> banned; // per candidate: banned by an earlier sibling
    std::uint64_t nodes = 0;
    bool aborted = false;
    const std::atomic<int>* winner = nullptr; // root child holding a better success
    int my_root_index = std::numeric_limits<int>::max();
};

// Branch point: uncovered point lying on the fewest usable candidates.
int pick_point(const Instance& ins, const Node& st) {
    int best = -1, best_cnt = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < ins.pts.size(); ++i) {
        if (!st.uncovered.test(i)) continue;
        int cnt = 0;
        for (int c : ins.through[i])
            if (!st.banned[c]) ++cnt;
        if (cnt < best_cnt) {
            best_cnt = cnt;
            best = static_cast<int>(i);
        }
    }
    return best;
}

bool dfs(const Instance& ins, Node& st) {
    ++st.nodes;
    if (st.winner && (st.nodes & 255) == 0 &&
        st.winner->load(std::memory_order_relaxed) < st.my_root_index) {
        st.aborted = true;
        return false;
    }
    if (st.uncovered.none()) return true;
    if (st.budget_left <= 0) return false;
    const int u = st.uncovered.count();
    if ((u + ins.max_cover - 1) / ins.max_cover > st.budget_left) return false;

    const int x = pick_point(ins, st);
    std::vector<int> newly_banned;
    for (int c : ins.through[x]) {
        if (st.banned[c]) continue;
        Mask saved = st.uncovered;
        st.uncovered.subtract(ins.cand_mask[c]);
        st.chosen.push_back(c);
        --st.budget_left;
        if (dfs(ins, st)) return true;
        ++st.budget_left;
        st.chosen.pop_back();
        st.uncovered = std::move(saved);
        if (st.aborted) return false;
        st.banned[c] = 1; // covers using c are fully explored above
        newly_banned.push_back(c);
    }
    // last child: one whole line spent on x alone
    st.uncovered.clear(static_cast<std::size_t>(x));
    st.singles.push_back(x);
    --st.budget_left;
    if (dfs(ins, st)) return true;
    ++st.budget_left;
    st.singles.pop_back();
    st.uncovered.set(static_cast<std::size_t>(x));
    for (int c : newly_banned) st.banned[c] = 0;
    return false;
}

PadicCertificate assemble(const Instance& ins, const Node& st, int budget) {
    PadicCertificate cert;
    cert.budget = budget;
    for (int c : st.chosen) cert.lines.push_back(ins.cands[c]);
    for (int i : st.singles) cert.singletons.push_back(ins.pts[static_cast<std::size_t>(i)]);
    cert.assignment.assign(ins.pts.size(), 0);
    for (std::size_t i = 0; i < ins.pts.size(); ++i) {
        int a = std::numeric_limits<int>::min();
        for (std::size_t j = 0; j < st.chosen.size(); ++j) {
            if (ins.cand_mask[static_cast<std::size_t>(st.chosen[j])].test(i)) {
                a = static_cast<int>(j);
                break;
            }
        }
        if (a == std::numeric_limits<int>::min()) {
            for (std::size_t s = 0; s < st.singles.size(); ++s)
                if (st.singles[s] == static_cast<int>(i)) a = -static_cast<int>(s) - 1;
        }
        cert.assignment[i] = a;
    }
#ifndef NDEBUG
    if (!verify_certificate(*ins.R, ins.pts, cert)) std::abort();
#endif
    return cert;
}

struct RootChild {
    bool singleton = false;
    int cand = -1;
};

// Decision at one exact budget. The parallel path splits the root's
// children across threads; the chosen result is the success of smallest
// child index, which is exactly what the serial scan returns first.
PadicCoverResult decide(const Instance& ins, int budget, const SolveOptions& opts) {
    PadicCoverResult res;
    Node root;
    root.uncovered = Mask::full(ins.pts.size());
    root.budget_left = budget;
    root.banned.assign(ins.cands.size(), 0);

    if (root.uncovered.none()) {
        res.cert = assemble(ins, root, budget);
        res.stats.nodes = 1;
        return res;
    }
    if (budget <= 0 ||
        (root.uncovered.count() + ins.max_cover - 1) / ins.max_cover > budget) {
        res.stats.nodes = 1;
        res.stats.exhausted = true;
        return res;
    }

    const int x = pick_point(ins, root);
    std::vector<RootChild> children;
    for (int c : ins.through[x]) children.push_back({false, c});
    children.push_back({true, -1});

    auto child_node = [&](std::size_t i) {
        Node st;
        st.uncovered = root.uncovered;
        st.budget_left = budget - 1;
        st.banned.assign(ins.cands.size(), 0);
        for (std::size_t j = 0; j < i; ++j)
            if (!children[j].singleton) st.banned[children[j].cand] = 1;
        if (children[i].singleton) {
            st.uncovered.clear(static_cast<std::size_t>(x));
            st.singles.push_back(x);
        } else {
            st.uncovered.subtract(ins.cand_mask[static_cast<std::size_t>(children[i].cand)]);
            st.chosen.push_back(children[i].cand);
        }
        return st;
    };

    const int threads =
#ifdef _OPENMP
        std::max(1, opts.threads);
#else
        1;
#endif

    if (threads == 1 || children.size() <= 1) {
        std::uint64_t nodes = 1;
        for (std::size_t i = 0; i < children.size(); ++i) {
            Node st = child_node(i);
            const bool found = dfs(ins, st);
            nodes += st.nodes;
            if (found) {
                res.cert = assemble(ins, st, budget);
                res.stats.nodes = nodes;
                return res;
            }
        }
        res.stats.nodes = nodes;
        res.stats.exhausted = true;
        return res;
    }

#ifdef _OPENMP
    std::vector<Node> results(children.size());
    std::vector<char> found(children.size(), 0);
    std::vector<std::uint64_t> child_nodes(children.size(), 0);
    std::atomic<int> winner{std::numeric_limits<int>::max()};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (winner.load(std::memory_order_relaxed) < static_cast<int>(i)) continue;
        Node st = child_node(i);
        st.winner = &winner;
        st.my_root_index = static_cast<int>(i);
        const bool ok = dfs(ins, st);
        child_nodes[i] = st.nodes;
        if (ok) {
            found[i] = 1;
            results[i] = std::move(st);
            int expect = winner.load();
            while (static_cast<int>(i) < expect &&
                   !winner.compare_exchange_weak(expect, static_cast<int>(i))) {
            }
        }
    }

    std::uint64_t nodes = 1;
    for (std::uint64_t n : child_nodes) nodes += n;
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (found[i]) {
            res.cert = assemble(ins, results[i], budget);
            res.stats.nodes = nodes;
            return res;
        }
    }
    res.stats.nodes = nodes;
    res.stats.exhausted = true;
#endif
    return res;
}

} // namespace

std::vector<PadicLine> candidate_lines(const RingCtx& R, std::span<const PadicPoint> S) {
    std::vector<PadicLine> out;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            auto ls = lines_through_pair(R, S[i], S[j]);
            out.insert(out.end(), ls.begin(), ls.end());
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PadicCoverResult cover_with_lines(const RingCtx& R, std::span<const PadicPoint> S,
                                  int budget, const SolveOptions& opts) {
    if (budget < 0) throw BadParameters("line budget must be non-negative");
    const Instance ins = build_instance(R, S);
    return decide(ins, budget, opts);
}

MinCoverResult min_line_cover_padic(const RingCtx& R, std::span<const PadicPoint> S,
                                    int t_max, const SolveOptions& opts) {
    if (t_max < 0) throw BadParameters("line budget must be non-negative");
    const Instance ins = build_instance(R, S);
    MinCoverResult res;
    for (int b = 0; b <= t_max; ++b) {
        PadicCoverResult dec = decide(ins, b, opts);
        res.stats.nodes += dec.stats.nodes;
        if (dec.cert) {
            res.t_min = b;
            res.cert = std::move(dec.cert);
            return res;
        }
    }
    res.stats.exhausted = true;
    return res;
}

bool verify_certificate(const RingCtx& R, std::span<const PadicPoint> S,
                        const PadicCertificate& cert, const PadicPoint* excluded) {
    if (static_cast<int>(cert.lines.size() + cert.singletons.size()) > cert.budget)
        return false;
    if (cert.assignment.size() != S.size()) return false;
    for (const PadicLine& L : cert.lines) {
        // canonical shape of the stored objects
        if (L.dir.unit_first ? L.base.x1 != 0
                             : (L.base.x2 != 0 || L.dir.param % R.p != 0))
            return false;
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
        const int a = cert.assignment[i];
        if (a >= 0) {
            if (a >= static_cast<int>(cert.lines.size())) return false;
            if (!line_contains(R, cert.lines[static_cast<std::size_t>(a)], S[i]))
                return false;
        } else {
            const int s = -a - 1;
            if (s >= static_cast<int>(cert.singletons.size())) return false;
            if (reduce(R, S[i]) != cert.singletons[static_cast<std::size_t>(s)])
                return false;
        }
    }
    if (excluded) {
        const PadicPoint e = reduce(R, *excluded);
        for (const PadicLine& L : cert.lines)
            if (line_contains(R, L, e)) return false;
        for (const PadicPoint& s : cert.singletons)
            if (s == e) return false;
    }
    return true;
}

PadicNearCoverReport nearly_covered(const RingCtx& R, std::span<const PadicPoint> S,
                                    int t, const SolveOptions& opts) {
    PadicNearCoverReport rep;
    rep.budget = t;

    PadicCoverResult full = cover_with_lines(R, S, t, opts);
    rep.full_coverable = full.cert.has_value();
    rep.full_cover = std::move(full.cert);
    rep.full_stats = full.stats;

    rep.deletion_certs.assign(S.size(), std::nullopt);
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.threads)) \
    if (opts.threads > 1)
#endif
    for (std::size_t i = 0; i < S.size(); ++i) {
        try {
            std::vector<PadicPoint> rest;
            rest.reserve(S.size() - 1);
            for (std::size_t j = 0; j < S.size(); ++j)
                if (j != i) rest.push_back(S[j]);
            SolveOptions inner = opts;
            inner.threads = 1; // parallelism lives on the deletion loop
            PadicCoverResult d = cover_with_lines(R, rest, t, inner);
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
