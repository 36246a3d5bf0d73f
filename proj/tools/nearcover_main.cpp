#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nearcover/bounds.hpp"
#include "nearcover/constructions.hpp"
#include "nearcover/io.hpp"
#include "nearcover/solver.hpp"

using namespace nearcover;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// exit-code contract: 0 verdict-true, 1 verdict-false, 2 usage error
enum ExitCode { kTrue = 0, kFalse = 1, kUsage = 2 };

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw FileFormatError("cannot write " + out_path);
    out << text << "\n";
}

std::vector<DimensionVector> parse_vectors(const std::string& text) {
    std::vector<DimensionVector> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.empty()) continue;
        std::vector<int> entries;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                entries.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw BadParameters("bad vector entry: " + item);
            }
        }
        out.push_back(make_dimension_vector(std::move(entries)));
    }
    if (out.empty()) throw BadParameters("empty vector list");
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::int64_t v = std::stoll(text);
            return {v, v};
        }
        const std::int64_t lo = std::stoll(text.substr(0, dots));
        const std::int64_t hi = std::stoll(text.substr(dots + 2));
        if (hi < lo) throw BadParameters("empty range: " + text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw BadParameters("bad range: " + text);
    }
}

json budget_json(int lines, const std::vector<DimensionVector>* vectors) {
    json j;
    if (vectors) {
        json vs = json::array();
        for (const DimensionVector& v : *vectors) vs.push_back(v.entries);
        j["vectors"] = std::move(vs);
    } else {
        j["lines"] = lines;
    }
    return j;
}

json point_json(const PointSetFile& f, std::size_t i) {
    if (f.padic) return json{f.padic_points[i].x1, f.padic_points[i].x2};
    json row = json::array();
    for (const Rat& c : f.rat_points[i]) row.push_back(format_rational(c));
    return row;
}

int run_gen(const std::string& kind, int n, int t, int s, std::int64_t p,
            std::int64_t k, const std::string& side, const std::string& out_path) {
    PointSetFile f;
    if (kind == "triangle") {
        f.n = n;
        f.rat_points = triangle(n, t);
        f.provenance = {{"construction", "triangle"},
                        {"parameters", {{"n", n}, {"t", t}}}};
    } else if (kind == "missing-triangle") {
        const WithZerosBound wz = with_zeros_bound(n, t, s);
        f.n = n;
        f.rat_points = triangle(n, t);
        f.provenance = {{"construction", "missing-triangle"},
                        {"parameters",
                         {{"n", n}, {"t", t}, {"s", s}, {"t1", wz.t1}, {"t2", wz.t2}}}};
    } else if (kind == "tight-example") {
        if (side != "left" && side != "right")
            throw BadParameters("--side must be left or right");
        const auto cfg = tight_example_configs();
        f.n = 2;
        f.rat_points = side == "left" ? cfg.left : cfg.right;
        f.provenance = {{"construction", "tight-example"},
                        {"parameters", {{"side", side}}}};
    } else if (kind == "tower") {
        const TowerParams P = tower_params(p, t, k);
        f.padic = true;
        f.n = 2;
        f.p = p;
        f.k = k;
        f.padic_points = padic_tower(P, static_cast<int>(P.M));
        f.provenance = {{"construction", "tower"},
                        {"parameters",
                         {{"p", p},
                          {"k", k},
                          {"t", t},
                          {"ell", P.ell},
                          {"M", P.M},
                          {"t_prime", P.t_prime},
                          {"r", P.r}}}};
    } else {
        throw BadParameters("unknown generator kind: " + kind);
    }
    emit(out_path, dump_json(to_json(f)));
    return kTrue;
}

int run_cover(const PointSetFile& f, int budget,
              const std::vector<DimensionVector>* vectors, int threads, bool timing,
              const std::string& out_path) {
    Timer timer;
    json rep;
    rep["tool_version"] = kVersion;
    rep["command"] = "cover";
    rep["input"] = to_json(f);
    rep["budget"] = budget_json(budget, vectors);

    bool coverable = false;
    if (f.padic) {
        if (vectors) throw BadParameters("padic inputs take --budget, not --vectors");
        const RingCtx R = f.ring();
        const auto res =
            min_line_cover_padic(R, f.padic_points, budget, SolveOptions{threads});
        coverable = res.t_min.has_value();
        if (coverable) {
            rep["min_lines"] = *res.t_min;
            rep["certificate"] = to_json(R, *res.cert);
        } else {
            rep["noncover_witness"] = {{"exhausted", true}, {"nodes", res.stats.nodes}};
        }
    } else {
        std::vector<DimensionVector> V;
        if (vectors)
            V = *vectors;
        else
            V.push_back(make_dimension_vector(
                std::vector<int>(static_cast<std::size_t>(budget), 1)));
        const auto res = coverable_by_vector_set(f.rat_points, V, SolveOptions{threads});
        coverable = res.cert.has_value();
        if (coverable) {
            rep["vector_used"] = res.v_used->entries;
            rep["certificate"] = to_json(*res.cert);
        } else {
            rep["noncover_witness"] = {{"exhausted", true}, {"nodes", res.stats.nodes}};
        }
    }
    rep["coverable"] = coverable;
    if (timing) rep["timing_ms"] = timer.ms();
    emit(out_path, dump_json(rep));
    return coverable ? kTrue : kFalse;
}

int run_nearcover(const PointSetFile& f, int budget,
                  const std::vector<DimensionVector>* vectors, int threads, bool timing,
                  const std::string& out_path) {
    Timer timer;
    json rep;
    rep["tool_version"] = kVersion;
    rep["command"] = "nearcover";
    rep["input"] = to_json(f);
    rep["budget"] = budget_json(budget, vectors);

    bool verdict = false;
    json deletions = json::array();
    if (f.padic) {
        if (vectors) throw BadParameters("padic inputs take --budget, not --vectors");
        const RingCtx R = f.ring();
        const auto r = nearly_covered(R, f.padic_points, budget, SolveOptions{threads});
        verdict = r.verdict;
        if (r.full_coverable) {
            rep["full_cover"] = to_json(R, *r.full_cover);
        } else {
            rep["noncover_witness"] = {{"exhausted", true},
                                       {"nodes", r.full_stats.nodes}};
        }
        for (std::size_t i = 0; i < f.padic_points.size(); ++i) {
            json d;
            d["point"] = point_json(f, i);
            d["coverable"] = r.deletion_certs[i].has_value();
            if (r.deletion_certs[i]) d["certificate"] = to_json(R, *r.deletion_certs[i]);
            deletions.push_back(std::move(d));
        }
    } else {
        std::vector<DimensionVector> V;
        if (vectors)
            V = *vectors;
        else
            V.push_back(make_dimension_vector(
                std::vector<int>(static_cast<std::size_t>(budget), 1)));
        const auto r = nearly_covered(f.rat_points, V, SolveOptions{threads});
        verdict = r.verdict;
        if (r.full_coverable) {
            rep["full_cover"] = to_json(*r.full_cover);
            rep["full_vector"] = r.full_vector->entries;
        } else {
            rep["noncover_witness"] = {{"exhausted", true},
                                       {"nodes", r.full_stats.nodes}};
        }
        for (std::size_t i = 0; i < f.rat_points.size(); ++i) {
            json d;
            d["point"] = point_json(f, i);
            d["coverable"] = r.deletion_certs[i].has_value();
            if (r.deletion_certs[i]) {
                d["certificate"] = to_json(*r.deletion_certs[i]);
                d["vector_used"] = r.deletion_vectors[i]->entries;
            }
            deletions.push_back(std::move(d));
        }
    }
    rep["deletions"] = std::move(deletions);
    rep["verdict"] = verdict;
    if (timing) rep["timing_ms"] = timer.ms();
    emit(out_path, dump_json(rep));
    return verdict ? kTrue : kFalse;
}

int run_bounds(const std::string& t_range, const std::string& k_range, int s) {
    const auto [t_lo, t_hi] = parse_range(t_range);
    const auto [k_lo, k_hi] = parse_range(k_range);
    if (t_lo < 1 || k_lo < 1) throw BadParameters("bounds need t >= 1 and k >= 1");
    std::printf("%4s %4s %12s %14s %12s %14s\n", "t", "k", "field", "matroid", "padic",
                "with-zeros");
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        for (std::int64_t k = k_lo; k <= k_hi; ++k) {
            std::printf("%4lld %4lld %12lld %14lld %12lld ", static_cast<long long>(t),
                        static_cast<long long>(k),
                        static_cast<long long>(field_bound(t, k)),
                        static_cast<long long>(matroid_bound(t, k)),
                        static_cast<long long>(padic_bound(t, k)));
            if (s > t)
                std::printf("%14s\n", "-");
            else
                std::printf("%14lld\n",
                            static_cast<long long>(with_zeros_bound(k + 1, t, s).value));
        }
    }
    return kTrue;
}

int run_oracle_check(const PointSetFile& f, int budget, int threads,
                     const std::string& out_path) {
    if (!f.padic) throw BadParameters("oracle-check works on padic inputs");
    const RingCtx R = f.ring();
    const auto fast =
        min_line_cover_padic(R, f.padic_points, budget, SolveOptions{threads});
    const auto slow = oracle_min_line_cover(R, f.padic_points, budget);

    json rep;
    rep["tool_version"] = kVersion;
    rep["command"] = "oracle-check";
    rep["input"] = to_json(f);
    rep["budget"] = budget_json(budget, nullptr);
    rep["solver_min"] = fast.t_min ? json(*fast.t_min) : json(nullptr);
    rep["oracle_min"] = slow ? json(*slow) : json(nullptr);
    const bool agree =
        fast.t_min.has_value() == slow.has_value() && (!slow || *fast.t_min == *slow);
    bool cert_ok = true;
    if (fast.cert) cert_ok = verify_certificate(R, f.padic_points, *fast.cert);
    rep["certificate_verifies"] = cert_ok;
    rep["agree"] = agree;
    emit(out_path, dump_json(rep));
    return agree && cert_ok ? kTrue : kFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for nearly covered point sets"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a point-set file");
    std::string kind, side = "left", gen_out;
    int gen_n = 2, gen_t = 2, gen_s = 0;
    std::int64_t gen_p = 67, gen_k = 2;
    gen->add_option("kind", kind, "triangle | missing-triangle | tight-example | tower")
        ->required();
    gen->add_option("--n", gen_n, "ambient dimension");
    gen->add_option("--t", gen_t, "triangle scale / tower base budget");
    gen->add_option("--s", gen_s, "zero-entry scale for missing-triangle");
    gen->add_option("--p", gen_p, "prime modulus base");
    gen->add_option("--k", gen_k, "number of scales");
    gen->add_option("--side", side, "tight-example side: left | right");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    std::string input_path, vectors_text, out_path;
    int budget = -1, threads = 1;
    bool timing = false;
    auto add_solver_flags = [&](CLI::App* cmd, bool vectors_allowed) {
        cmd->add_option("input", input_path, "point-set file")->required();
        cmd->add_option("--budget", budget, "line budget t");
        if (vectors_allowed)
            cmd->add_option("--vectors", vectors_text,
                            "dimension vectors, e.g. \"1,1,0,0;2,1\"");
        cmd->add_option("--threads", threads, "solver threads")
            ->check(CLI::Range(1, 256));
        cmd->add_flag("--timing", timing, "include wall-clock timing in the report");
        cmd->add_option("-o,--output", out_path, "report path (default stdout)");
    };
    auto* cover = app.add_subcommand("cover", "decide coverability, with certificate");
    add_solver_flags(cover, true);
    auto* near = app.add_subcommand("nearcover", "decide the near-cover predicate");
    add_solver_flags(near, true);
    auto* oracle = app.add_subcommand(
        "oracle-check", "compare the solver against the brute-force oracle");
    add_solver_flags(oracle, false);

    auto* bounds = app.add_subcommand("bounds", "print the closed-form bound table");
    std::string t_range, k_range;
    int bounds_s = 0;
    bounds->add_option("--t", t_range, "t range, e.g. 1..4")->required();
    bounds->add_option("--k", k_range, "k range, e.g. 1..3")->required();
    bounds->add_option("--s", bounds_s, "zero-entry scale for the with-zeros column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed())
            return run_gen(kind, gen_n, gen_t, gen_s, gen_p, gen_k, side, gen_out);
        if (bounds->parsed()) return run_bounds(t_range, k_range, bounds_s);

        const PointSetFile f = read_point_set_file(input_path);
        const bool has_vectors = !vectors_text.empty();
        std::vector<DimensionVector> V;
        if (has_vectors) V = parse_vectors(vectors_text);
        if (!has_vectors && budget < 0)
            throw BadParameters("one of --budget or --vectors is required");
        if (has_vectors && budget >= 0)
            throw BadParameters("--budget and --vectors are mutually exclusive");

        if (cover->parsed())
            return run_cover(f, budget, has_vectors ? &V : nullptr, threads, timing,
                             out_path);
        if (near->parsed())
            return run_nearcover(f, budget, has_vectors ? &V : nullptr, threads, timing,
                                 out_path);
        if (oracle->parsed()) return run_oracle_check(f, budget, threads, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
