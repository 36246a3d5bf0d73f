#include <doctest.h>

#include "nearcover/ring.hpp"

using namespace nearcover;

TEST_SUITE_BEGIN("ring");

TEST_CASE("valuation follows the zero convention") {
    const RingCtx R = make_ring(5, 3);
    CHECK(valuation(R, 0) == 3);
    CHECK(valuation(R, 75) == 2);
    CHECK(valuation(R, 7) == 0);
    CHECK(valuation(R, 5) == 1);
    CHECK(valuation(R, 124) == 0);
}

TEST_CASE("ring context validation") {
    CHECK_THROWS_AS(make_ring(4, 2), BadParameters);
    CHECK_THROWS_AS(make_ring(1, 2), BadParameters);
    CHECK_THROWS_AS(make_ring(5, 0), BadParameters);
    CHECK_THROWS_AS(make_ring(2, 31), BadParameters);   // 2^31 hits the cap
    CHECK(make_ring(2, 30).modulus == (1 << 30));
    CHECK(make_ring(67, 5).modulus == 1350125107LL);
    CHECK_THROWS_AS(make_ring(46349, 2), BadParameters); // 46349^2 > 2^31
}

TEST_CASE("unit inverses, exhaustively on Z/27") {
    const RingCtx R = make_ring(3, 3);
    for (std::int64_t a = 0; a < R.modulus; ++a) {
        if (a % 3 == 0) {
            CHECK(!is_unit(R, a));
            CHECK_THROWS_AS(inv_unit(R, a), BadParameters);
        } else {
            CHECK(mul(R, a, inv_unit(R, a)) == 1);
        }
    }
}

TEST_CASE("coordinate-wise distance scale") {
    const RingCtx R = make_ring(5, 2);
    const std::int64_t a[] = {0, 0}, b[] = {5, 25 % 25}, c[] = {1, 5};
    CHECK(pdist_scale(R, a, b) == 1); // (5, 0): min(1, k) = 1
    CHECK(pdist_scale(R, a, a) == 2);
    CHECK(pdist_scale(R, a, c) == 0);

    const RingCtx R3 = make_ring(5, 3);
    const std::int64_t x[] = {0, 0, 0}, y[] = {25, 50, 10};
    CHECK(pdist_scale(R3, x, y) == 1);
    const std::int64_t z[] = {25, 0, 75};
    CHECK(pdist_scale(R3, x, z) == 2);
}

TEST_SUITE_END();
