#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/numeric.hpp"

using namespace latgeo;

TEST_CASE("make_q canonicalizes") {
    CHECK(make_q(2, 4) == make_q(1, 2));
    CHECK(make_q(-6, -4) == make_q(3, 2));
    CHECK(make_q(0, 7) == 0);
    CHECK_THROWS_AS(make_q(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse and format round trip") {
    CHECK(parse_rational("3/6") == make_q(1, 2));
    CHECK(parse_rational("-5") == -5);
    CHECK(format_rational(make_q(4, 6)) == "2/3");
    CHECK(format_rational(mpq_class(7)) == "7");
    CHECK(parse_rational(format_rational(make_q(-22, 8))) == make_q(-11, 4));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("floor and ceiling division") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_q(make_q(-1, 2)) == -1);
    CHECK(ceil_q(make_q(-1, 2)) == 0);
}

TEST_CASE("integer square root") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    mpz_class big = pow_z(mpz_class(10), 40) - 1;
    mpz_class r = isqrt(big);
    CHECK(r * r <= big);
    CHECK((r + 1) * (r + 1) > big);
    CHECK_THROWS_AS(isqrt(-1), std::invalid_argument);
}

TEST_CASE("exact sign of a + sqrt(s) - sqrt(t)") {
    // 1 + sqrt(2) - sqrt(5) > 0 since (1+sqrt2)^2 = 3+2sqrt2 > 5.
    CHECK(sign_plus_sqrt_minus_sqrt(1, 2, 5) > 0);
    CHECK(sign_plus_sqrt_minus_sqrt(0, 2, 2) == 0);
    CHECK(sign_plus_sqrt_minus_sqrt(-3, 4, 1) < 0);  // -3 + 2 - 1
    CHECK(sign_plus_sqrt_minus_sqrt(2, 0, 4) == 0);
    CHECK(sign_plus_sqrt_minus_sqrt(make_q(1, 2), make_q(1, 4), 1) == 0);
    // Near-tie that floats would miss: sqrt(10^20+1) - sqrt(10^20) > 0.
    mpq_class huge = pow_z(mpz_class(10), 20);
    CHECK(sign_plus_sqrt_minus_sqrt(0, huge + 1, huge) > 0);
}

TEST_CASE("deterministic rng") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(42);
    for (int i = 0; i < 50; ++i) {
        mpq_class u = c.unit_rational(96);
        CHECK(u > 0);
        CHECK(u < 1);
        CHECK(u.get_den() == pow2(96));  // odd numerator keeps the full denominator
        long s = c.signed_below(5);
        CHECK(s >= -5);
        CHECK(s <= 5);
    }
}
