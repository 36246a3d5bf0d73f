// Drives the command-line tool end to end: exit codes, file round-trips,
// certificate re-verification, and byte-identical output across thread
// counts. Takes the tool path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nearcover/constructions.hpp"
#include "nearcover/io.hpp"
#include "nearcover/solver.hpp"

using namespace nearcover;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

std::string tool;
fs::path work;

int run(const std::string& args) {
    const std::string cmd = tool + " " + args + " > " + (work / "stdout.txt").string() +
                            " 2> " + (work / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string out() { return slurp(work / "stdout.txt"); }

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <path-to-tool>\n";
        return 2;
    }
    tool = argv[1];
    work = fs::temp_directory_path() / "nearcover_cli_checks";
    fs::remove_all(work);
    fs::create_directories(work);

    // --- gen: triangle ---------------------------------------------------
    expect(run("gen triangle --n 2 --t 3 -o " + (work / "t23.json").string()) == 0,
           "gen triangle exits 0");
    {
        const PointSetFile f = read_point_set_file((work / "t23.json").string());
        expect(!f.padic && f.rat_points.size() == 10, "triangle(2,3) has 10 points");
        expect(f.provenance.at("construction") == "triangle", "provenance names the kind");
        // writing the parsed file back reproduces the bytes
        const std::string again = dump_json(to_json(f)) + "\n";
        expect(again == slurp(work / "t23.json"), "point-set file round-trips");
    }

    // --- gen: tower ------------------------------------------------------
    expect(run("gen tower --p 67 --k 2 --t 2 -o " + (work / "tower.json").string()) == 0,
           "gen tower exits 0");
    {
        const PointSetFile f = read_point_set_file((work / "tower.json").string());
        expect(f.padic && f.padic_points.size() == 7, "tower file has 7 residue points");
    }
    expect(run("gen tower --p 5 --k 2 --t 2") == 2, "invalid tower parameters exit 2");
    expect(run("gen nonsense --t 1") == 2, "unknown generator kind exits 2");

    // --- nearcover: rational verdicts and exit codes ----------------------
    expect(run("gen triangle --n 2 --t 2 -o " + (work / "t22.json").string()) == 0,
           "gen triangle t=2");
    expect(run("nearcover " + (work / "t22.json").string() + " --budget 2 -o " +
               (work / "rep22.json").string()) == 0,
           "triangle(2,2) is nearly covered by 2 lines (exit 0)");
    {
        const json rep = json::parse(slurp(work / "rep22.json"));
        expect(rep.at("verdict") == true, "report verdict true");
        expect(rep.at("noncover_witness").at("exhausted") == true,
               "noncover witness is an exhausted search");
        const PointSetFile f = point_set_from_json(rep.at("input"));
        expect(f.rat_points.size() == 6, "report echoes the input");
        // every deletion certificate re-verifies against the deleted set
        for (const json& d : rep.at("deletions")) {
            expect(d.at("coverable") == true, "deletion coverable");
            RatPoint gone;
            for (const json& c : d.at("point"))
                gone.push_back(parse_rational(c.get<std::string>()));
            std::vector<RatPoint> rest;
            for (const RatPoint& q : f.rat_points)
                if (q != gone) rest.push_back(q);
            const RationalCertificate cert =
                rational_certificate_from_json(d.at("certificate"));
            expect(verify_certificate(rest, cert, &gone),
                   "deletion certificate re-verifies");
        }
    }

    // far extra point breaks the verdict -> exit 1
    {
        PointSetFile f = read_point_set_file((work / "t22.json").string());
        f.rat_points.push_back({Rat(10), Rat(10)});
        f.provenance = nullptr;
        write_point_set_file((work / "t22far.json").string(), f);
        expect(run("nearcover " + (work / "t22far.json").string() + " --budget 2") == 1,
               "triangle plus far point exits 1");
    }

    // usage errors -> exit 2
    expect(run("nearcover " + (work / "t22.json").string()) == 2,
           "missing budget exits 2");
    expect(run("nearcover " + (work / "t22.json").string() +
               " --budget 2 --vectors 1,1") == 2,
           "budget and vectors together exit 2");
    expect(run("nearcover " + (work / "missing.json").string() + " --budget 2") == 2,
           "missing input file exits 2");

    // --- nearcover: vectors on the ten-point triangle ----------------------
    expect(run("gen missing-triangle --n 2 --t 3 --s 1 -o " +
               (work / "t33.json").string()) == 0,
           "gen missing-triangle");
    expect(run("nearcover " + (work / "t33.json").string() +
               " --vectors 1,1,0,0 -o " + (work / "rep33.json").string()) == 0,
           "triangle(2,3) nearly covered by two lines and two points");

    // --- nearcover: padic tower ------------------------------------------
    expect(run("nearcover " + (work / "tower.json").string() + " --budget 2 -o " +
               (work / "reptower.json").string()) == 0,
           "tower nearly covered by 2 lines");
    {
        const json rep = json::parse(slurp(work / "reptower.json"));
        const PointSetFile f = point_set_from_json(rep.at("input"));
        const RingCtx R = f.ring();
        for (const json& d : rep.at("deletions")) {
            const PadicPoint gone{d.at("point")[0].get<std::int64_t>(),
                                  d.at("point")[1].get<std::int64_t>()};
            std::vector<PadicPoint> rest;
            for (const PadicPoint& q : f.padic_points)
                if (q != gone) rest.push_back(q);
            const PadicCertificate cert =
                padic_certificate_from_json(R, d.at("certificate"));
            expect(verify_certificate(R, rest, cert, &gone),
                   "tower deletion certificate re-verifies");
        }
    }
    expect(run("nearcover " + (work / "tower.json").string() +
               " --vectors 1,1") == 2,
           "vectors on a padic input exit 2");

    // --- byte-identical reports across thread counts ----------------------
    for (const std::string threads : {"1", "4"}) {
        expect(run("nearcover " + (work / "tower.json").string() +
                   " --budget 2 --threads " + threads + " -o " +
                   (work / ("tower_t" + threads + ".json")).string()) == 0,
               "threads=" + threads + " near-cover run");
    }
    expect(slurp(work / "tower_t1.json") == slurp(work / "tower_t4.json"),
           "reports byte-identical across thread counts");

    // --- cover ------------------------------------------------------------
    expect(run("cover " + (work / "t22.json").string() + " --budget 3 -o " +
               (work / "cover22.json").string()) == 0,
           "triangle(2,2) coverable by 3 lines (exit 0)");
    {
        const json rep = json::parse(slurp(work / "cover22.json"));
        expect(rep.at("coverable") == true, "cover report coverable");
        const RationalCertificate cert =
            rational_certificate_from_json(rep.at("certificate"));
        const PointSetFile f = point_set_from_json(rep.at("input"));
        expect(verify_certificate(f.rat_points, cert), "cover certificate re-verifies");
    }
    expect(run("cover " + (work / "t22.json").string() + " --budget 2") == 1,
           "triangle(2,2) not coverable by 2 lines (exit 1)");

    // --- bounds -----------------------------------------------------------
    expect(run("bounds --t 1..4 --k 1..3") == 0, "bounds table exits 0");
    {
        const std::string table = out();
        int rows = 0;
        std::stringstream ss(table);
        std::string line;
        std::getline(ss, line); // header
        std::vector<std::string> data;
        while (std::getline(ss, line))
            if (!line.empty()) { ++rows; data.push_back(line); }
        expect(rows == 12, "12 data rows for t=1..4, k=1..3");
        bool has_field6 = false, has_padic9 = false;
        for (const std::string& l : data) {
            std::stringstream ls(l);
            long long t, k, field, matroid, padic;
            ls >> t >> k >> field >> matroid >> padic;
            if (t == 2 && k == 1 && field == 6) has_field6 = true;
            if (t == 2 && k == 2 && padic == 9) has_padic9 = true;
        }
        expect(has_field6, "table contains the six-point field bound");
        expect(has_padic9, "table contains the nine-point p-adic bound");
    }
    expect(run("bounds --t 4..1 --k 1") == 2, "bad range exits 2");

    // --- oracle-check ------------------------------------------------------
    {
        PointSetFile f;
        f.padic = true;
        f.n = 2;
        f.p = 3;
        f.k = 2;
        f.padic_points = {{0, 0}, {1, 0}, {0, 1}, {4, 7}, {2, 5}};
        write_point_set_file((work / "small.json").string(), f);
        expect(run("oracle-check " + (work / "small.json").string() + " --budget 4") == 0,
               "oracle agrees with the solver");
        expect(run("oracle-check " + (work / "tower.json").string() + " --budget 2") == 2,
               "oracle-check on a large ring exits 2");
    }

    // --- determinism of gen across repeated runs ---------------------------
    expect(run("gen tight-example --side right -o " + (work / "cfg_r1.json").string()) ==
               0,
           "gen tight-example");
    expect(run("gen tight-example --side right -o " + (work / "cfg_r2.json").string()) ==
               0,
           "gen tight-example again");
    expect(slurp(work / "cfg_r1.json") == slurp(work / "cfg_r2.json"),
           "generator output is reproducible");

    if (failures == 0) std::cout << "cli checks passed\n";
    return failures == 0 ? 0 : 1;
}
