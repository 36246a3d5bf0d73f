// Times the solvers' serial reference path against the OpenMP path on the
// same instances and checks that both produce identical answers. The
// dominant data-parallel loop is the per-deletion sweep inside the
// near-cover runs.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nearcover/constructions.hpp"
#include "nearcover/io.hpp"
#include "nearcover/solver.hpp"

using namespace nearcover;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

struct Row {
    std::string name;
    double serial = 0;
    double parallel = 0;
    bool equal = false;
};

template <typename F>
Row bench(const std::string& name, int threads, F&& run) {
    // run(threads) returns a summary string; equal summaries mean equal results
    Row row;
    row.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string serial = run(1);
    const auto t1 = std::chrono::steady_clock::now();
    const std::string parallel = run(threads);
    const auto t2 = std::chrono::steady_clock::now();
    row.serial = seconds(t0, t1);
    row.parallel = seconds(t1, t2);
    row.equal = serial == parallel;
    return row;
}

std::string summary(const RingCtx& R, const PadicNearCoverReport& rep) {
    std::string s = rep.verdict ? "true" : "false";
    for (const auto& c : rep.deletion_certs)
        s += c ? ";" + dump_json(to_json(R, *c)) : ";none";
    return s;
}

std::string summary(const RationalNearCoverReport& rep) {
    std::string s = rep.verdict ? "true" : "false";
    for (const auto& c : rep.deletion_certs)
        s += c ? ";" + dump_json(to_json(*c)) : ";none";
    return s;
}

} // namespace

int main(int argc, char** argv) {
    int threads = 2;
#ifdef _OPENMP
    threads = std::min(omp_get_max_threads(), 8);
#endif
    if (argc > 1) threads = std::atoi(argv[1]);
    if (threads < 2) threads = 2;
    std::printf("comparing 1 thread against %d threads\n\n", threads);

    std::vector<Row> rows;

    for (int t : {4, 5}) {
        const auto T = triangle(2, t);
        const std::vector<DimensionVector> V{
            make_dimension_vector(std::vector<int>(t, 1))};
        rows.push_back(bench("triangle t=" + std::to_string(t) + ": deletion sweep",
                             threads, [&](int th) {
                                 return summary(nearly_covered(T, V, SolveOptions{th}));
                             }));
    }
    {
        auto S = triangle(2, 5);
        S.push_back({Rat(10), Rat(10)});
        const std::vector<DimensionVector> V{
            make_dimension_vector(std::vector<int>(5, 1))};
        rows.push_back(bench("triangle t=5 plus far point: all-refusal sweep", threads,
                             [&](int th) {
                                 return summary(nearly_covered(S, V, SolveOptions{th}));
                             }));
    }
    {
        const TowerParams P = tower_params(149, 3, 2);
        const auto K = padic_tower(P, 1);
        rows.push_back(bench("tower p=149 k=2 t=3: near-cover sweep", threads,
                             [&](int th) {
                                 return summary(
                                     P.ring, nearly_covered(P.ring, K, 3,
                                                            SolveOptions{th}));
                             }));
    }
    {
        const RingCtx R = make_ring(5, 2);
        std::mt19937 rng(42);
        std::uniform_int_distribution<std::int64_t> coord(0, R.modulus - 1);
        std::vector<std::vector<PadicPoint>> batch;
        for (int i = 0; i < 60; ++i) {
            std::set<PadicPoint> s;
            while (s.size() < 14) s.insert({coord(rng), coord(rng)});
            batch.emplace_back(s.begin(), s.end());
        }
        rows.push_back(bench(
            "random p=5 k=2 batch, 60 x 14 points, budget 5", threads, [&](int th) {
                std::string acc;
                for (const auto& S : batch) {
                    const auto res = min_line_cover_padic(R, S, 5, SolveOptions{th});
                    acc += res.t_min ? std::to_string(*res.t_min) : "x";
                }
                return acc;
            }));
    }

    std::printf("%-48s %10s %10s %8s %7s\n", "task", "serial(s)", "omp(s)", "speedup",
                "equal");
    bool all_equal = true;
    for (const Row& r : rows) {
        std::printf("%-48s %10.3f %10.3f %8.2f %7s\n", r.name.c_str(), r.serial,
                    r.parallel, r.serial / (r.parallel > 0 ? r.parallel : 1e-9),
                    r.equal ? "yes" : "NO");
        all_equal = all_equal && r.equal;
    }
    return all_equal ? 0 : 1;
}
