#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/bounds.hpp"

using namespace latgeo;

TEST_CASE("closed form evaluators at frozen values") {
    CHECK(dbs_base(1) == 2);
    CHECK(dbs_base(4) == 16);
    CHECK(bell_bound(2, 2) == 16);
    CHECK(bell_bound(3, 1) == 27);
    CHECK(aliev_linear(3, 2) == 14);   // ceil(6/3)=2: 2*8-4+2
    CHECK(aliev_linear(2, 0) == 4);
    CHECK(averkov_linear(2, 4) == 8);  // 2*2+4
    CHECK(averkov_linear(3, 1) == 14); // 1*6+8
    CHECK(averkov_linear(2, 0) == 4);
    CHECK(ell_pigeonhole(2, 2) == 5);
    CHECK(ell_pigeonhole(3, 4) == 25);
}

TEST_CASE("cube root upper bound without real arithmetic") {
    CHECK(c2_upper(0) == 7);
    CHECK(c2_upper(2) == 8);
    CHECK(c2_upper(5) == 9);
    CHECK(c2_upper(26) == 13);
    for (long k = 0; k <= 200; ++k) {
        mpz_class v = c2_upper(k);
        CHECK(pow_z(mpz_class(100), 3) * pow_z(v, 3) <= pow_z(mpz_class(443), 3) * (k + 4));
        CHECK(pow_z(mpz_class(100), 3) * pow_z(v + 1, 3) > pow_z(mpz_class(443), 3) * (k + 4));
    }
}

TEST_CASE("minimum area of a convex lattice v-gon is never overstated") {
    CHECK(rabinowitz_min_area(6) == make_q(216 * 113 * 113, 8 * 355 * 355));
    // Hexagon with vertices (0,0),(1,0),(2,1),(2,2),(1,2),(0,1) has area 3.
    CHECK(rabinowitz_min_area(6) <= 3);
    // The octagon bound must not exceed the smallest known octagon area 7.
    CHECK(rabinowitz_min_area(8) <= 7);
}

TEST_CASE("composition bounds") {
    CHECK(subspace_bound(3, 2, mpz_class(6)) == 6 + 2 * 6);
    CHECK(critical_bound(3, mpz_class(2)) == 14);
}

TEST_CASE("high dimension bracket guards the unverified case") {
    LargeNBracket b = large_n_bracket(5, 2, mpz_class(4));
    CHECK(b.lower == 62);   // 2^6 - 2
    CHECK(b.verified);
    CHECK(b.lower <= b.upper);
    CHECK_THROWS(large_n_bracket(5, 1));
    LargeNBracket u = large_n_bracket(5, 1, std::nullopt, true);
    CHECK_FALSE(u.verified);
}

TEST_CASE("monotone deficit validation") {
    std::map<long, mpz_class> good{{0, 4}, {1, 6}, {2, 6}, {3, 6}};
    CHECK(validate_monotonic_deficit(good).empty());
    std::map<long, mpz_class> bad{{0, 6}, {1, 4}};
    auto violations = validate_monotonic_deficit(bad);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == 1);
}

TEST_CASE("bound report is internally consistent") {
    for (int n = 1; n <= 10; ++n)
        for (long k = 0; k <= 100; ++k) {
            BoundReport rep = bound_report(n, k);  // throws if upper < lower
            bool saw_upper = false, saw_lower = false;
            for (const auto& e : rep.entries) {
                saw_upper = saw_upper || e.kind == BoundKind::Upper;
                saw_lower = saw_lower || e.kind == BoundKind::Lower;
            }
            CHECK(saw_upper);
            CHECK(saw_lower);
        }
    BoundReport r24 = bound_report(2, 4);
    bool found = false;
    for (const auto& e : r24.entries)
        if (e.name == "averkov_linear") {
            found = true;
            CHECK(e.value == 8);
        }
    CHECK(found);
}
