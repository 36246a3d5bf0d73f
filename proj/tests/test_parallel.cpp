#include <doctest.h>

#include <random>
#include <set>

#include "nearcover/constructions.hpp"
#include "nearcover/io.hpp"
#include "nearcover/solver.hpp"

using namespace nearcover;

namespace {

std::string cert_text(const RingCtx& R, const std::optional<PadicCertificate>& c) {
    return c ? dump_json(to_json(R, *c)) : "none";
}

std::string cert_text(const std::optional<RationalCertificate>& c) {
    return c ? dump_json(to_json(*c)) : "none";
}

} // namespace

TEST_SUITE_BEGIN("parallel");

TEST_CASE("thread count never changes solver output") {
    const TowerParams P = tower_params(67, 2, 2);
    const auto K1 = padic_tower(P, 1);

    SUBCASE("minimum cover on the tower") {
        const auto serial = min_line_cover_padic(P.ring, K1, 3, SolveOptions{1});
        for (int threads : {2, 4}) {
            const auto par = min_line_cover_padic(P.ring, K1, 3, SolveOptions{threads});
            CHECK(serial.t_min == par.t_min);
            CHECK(cert_text(P.ring, serial.cert) == cert_text(P.ring, par.cert));
        }
    }
    SUBCASE("exhaustive refusal on the tower") {
        const auto serial = cover_with_lines(P.ring, K1, 2, SolveOptions{1});
        for (int threads : {2, 4}) {
            const auto par = cover_with_lines(P.ring, K1, 2, SolveOptions{threads});
            CHECK(!par.cert.has_value());
            CHECK(par.stats.exhausted);
            CHECK(par.stats.nodes == serial.stats.nodes); // full trees coincide
        }
    }
    SUBCASE("near-cover report on the tower") {
        const auto serial = nearly_covered(P.ring, K1, 2, SolveOptions{1});
        for (int threads : {2, 4}) {
            const auto par = nearly_covered(P.ring, K1, 2, SolveOptions{threads});
            CHECK(serial.verdict == par.verdict);
            REQUIRE(serial.deletion_certs.size() == par.deletion_certs.size());
            for (std::size_t i = 0; i < serial.deletion_certs.size(); ++i)
                CHECK(cert_text(P.ring, serial.deletion_certs[i]) ==
                      cert_text(P.ring, par.deletion_certs[i]));
        }
    }
}

TEST_CASE("thread count never changes rational reports") {
    const auto T = triangle(2, 3);
    const std::vector<DimensionVector> V{make_dimension_vector({1, 1, 1})};
    const auto serial = nearly_covered(T, V, SolveOptions{1});
    for (int threads : {2, 4}) {
        const auto par = nearly_covered(T, V, SolveOptions{threads});
        CHECK(serial.verdict == par.verdict);
        CHECK(cert_text(serial.full_cover) == cert_text(par.full_cover));
        REQUIRE(serial.deletion_certs.size() == par.deletion_certs.size());
        for (std::size_t i = 0; i < serial.deletion_certs.size(); ++i)
            CHECK(cert_text(serial.deletion_certs[i]) == cert_text(par.deletion_certs[i]));
    }
}

TEST_CASE("random batch, serial versus parallel") {
    std::mt19937 rng(5150);
    const RingCtx R = make_ring(3, 2);
    std::uniform_int_distribution<std::int64_t> coord(0, R.modulus - 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::set<PadicPoint> s;
        while (s.size() < 7) s.insert({coord(rng), coord(rng)});
        const std::vector<PadicPoint> S(s.begin(), s.end());
        const auto a = min_line_cover_padic(R, S, 3, SolveOptions{1});
        const auto b = min_line_cover_padic(R, S, 3, SolveOptions{2});
        CHECK(a.t_min == b.t_min);
        CHECK(cert_text(R, a.cert) == cert_text(R, b.cert));
    }
}

TEST_SUITE_END();
