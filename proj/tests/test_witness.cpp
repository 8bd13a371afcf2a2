#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/witness.hpp"

using namespace latgeo;

TEST_CASE("one gained point family") {
    for (int n = 1; n <= 4; ++n) {
        WitnessConfig w = k1_witness(n);
        CHECK(static_cast<long>(w.v.size()) == 2 * ((1L << n) - 1));
        CHECK(w.expected_size == 2 * ((1L << n) - 1));
        WitnessVerification check = verify_witness(w.v, 1);
        CHECK(check.ok);
        CHECK(check.convex_position);
        CHECK(check.nonvertex.contains(Point(n, mpz_class(0))));
    }
}

TEST_CASE("two gained points family") {
    for (int n = 1; n <= 4; ++n) {
        WitnessConfig w = k2_witness(n);
        CHECK(static_cast<long>(w.v.size()) == 2 * ((1L << n) - 1));
        WitnessVerification check = verify_witness(w.v, 2);
        CHECK(check.ok);
        CHECK(check.nonvertex.contains(Point(n, mpz_class(0))));
        CHECK(check.nonvertex.contains(Point(n, mpz_class(1))));
    }
}

TEST_CASE("collinear family gains exactly k diagonal points") {
    for (long k = 2; k <= 5; ++k) {
        WitnessConfig w = collinear_witness(2, k);
        WitnessVerification check = verify_witness(w.v, k);
        CHECK(check.ok);
        CHECK(check.actual_k == k);
    }
    CHECK_THROWS(collinear_witness(2, 1));
}

TEST_CASE("planar literal configurations") {
    auto figs = figure_witnesses();
    REQUIRE(figs.size() == 3);
    long expected_size[3] = {6, 8, 7};
    long expected_k[3] = {2, 4, 5};
    for (int i = 0; i < 3; ++i) {
        CHECK(static_cast<long>(figs[i].v.size()) == expected_size[i]);
        CHECK(figs[i].expected_nonvertex == expected_k[i]);
        WitnessVerification check = verify_witness(figs[i].v, expected_k[i]);
        CHECK(check.ok);
        CHECK(check.convex_position);
    }
}

TEST_CASE("verification rejects a wrong expectation") {
    WitnessConfig w = k1_witness(2);
    CHECK_FALSE(verify_witness(w.v, 3).ok);
}
