#include <doctest.h>

#include "nearcover/constructions.hpp"
#include "nearcover/io.hpp"

using namespace nearcover;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("rational formatting round-trips") {
    CHECK(format_rational(Rat(2, 3)) == "2/3");
    CHECK(format_rational(Rat(-4, 6)) == "-2/3");
    CHECK(format_rational(Rat(5)) == "5/1");
    CHECK(parse_rational("2/3") == Rat(2, 3));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("-9/3") == Rat(-3));
    CHECK_THROWS_AS(parse_rational("1/0"), FileFormatError);
    CHECK_THROWS_AS(parse_rational("x"), FileFormatError);
}

TEST_CASE("point set files round-trip byte for byte") {
    SUBCASE("rational") {
        PointSetFile f;
        f.padic = false;
        f.n = 2;
        f.rat_points = tight_example_configs().left;
        f.provenance = {{"construction", "tight-example"}, {"parameters", {{"side", "left"}}}};
        const std::string a = dump_json(to_json(f));
        const PointSetFile g = point_set_from_json(json::parse(a));
        CHECK(dump_json(to_json(g)) == a);
        CHECK(g.rat_points == f.rat_points);
    }
    SUBCASE("padic") {
        const TowerParams P = tower_params(67, 2, 2);
        PointSetFile f;
        f.padic = true;
        f.n = 2;
        f.p = 67;
        f.k = 2;
        f.padic_points = padic_tower(P, 1);
        const std::string a = dump_json(to_json(f));
        const PointSetFile g = point_set_from_json(json::parse(a));
        CHECK(dump_json(to_json(g)) == a);
        CHECK(g.padic_points == f.padic_points);
    }
}

TEST_CASE("malformed files are rejected") {
    json j;
    j["space"] = "padic";
    j["n"] = 2;
    j["p"] = 5;
    j["k"] = 1;
    j["points"] = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(point_set_from_json(j), FileFormatError);
    j["points"] = {{0, 7}};
    CHECK_THROWS_AS(point_set_from_json(j), FileFormatError);
    j["space"] = "euclidean";
    CHECK_THROWS_AS(point_set_from_json(j), FileFormatError);

    json r;
    r["space"] = "rational";
    r["n"] = 2;
    r["points"] = {{"1/2", "1/2"}, {"1/2", "1/2"}};
    CHECK_THROWS_AS(point_set_from_json(r), FileFormatError);
    r["points"] = {{"1/2"}};
    CHECK_THROWS_AS(point_set_from_json(r), FileFormatError);
}

TEST_CASE("certificates survive serialization and re-verify") {
    SUBCASE("padic") {
        const TowerParams P = tower_params(67, 2, 2);
        const auto K1 = padic_tower(P, 1);
        const auto res = min_line_cover_padic(P.ring, K1, 3);
        REQUIRE(res.cert.has_value());
        const json j = to_json(P.ring, *res.cert);
        const PadicCertificate back = padic_certificate_from_json(P.ring, j);
        CHECK(dump_json(to_json(P.ring, back)) == dump_json(j));
        CHECK(verify_certificate(P.ring, K1, back));
    }
    SUBCASE("rational") {
        const auto T = triangle(2, 2);
        std::vector<RatPoint> rest(T.begin() + 1, T.end());
        const auto res = coverable_by_vector(rest, make_dimension_vector({1, 1}));
        REQUIRE(res.cert.has_value());
        const json j = to_json(*res.cert);
        const RationalCertificate back = rational_certificate_from_json(j);
        CHECK(dump_json(to_json(back)) == dump_json(j));
        CHECK(verify_certificate(rest, back, &T[0]));
    }
}

TEST_SUITE_END();
