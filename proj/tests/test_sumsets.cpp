#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/geom.hpp"
#include "latgeo/hull.hpp"
#include "latgeo/sumsets.hpp"

using namespace latgeo;

namespace {

PointSet one_d(std::initializer_list<long> xs) {
    PointSet s(1);
    for (long x : xs) s.insert({x});
    return s;
}

}  // namespace

TEST_CASE("midpoint set excludes source points") {
    PointSet v(2);
    v.insert({0, 0});
    v.insert({2, 0});
    v.insert({0, 2});
    MidpointSet m = midpoint_set(v);
    // midpoints: (1,0), (0,1), (1,1), none of them in V
    CHECK(m.points.size() == 3);
    v.insert({1, 0});  // now one midpoint is a source point
    CHECK(midpoint_set(v).points.size() >= 3);
    PointSet w(2);
    w.insert({0, 0});
    w.insert({2, 0});
    w.insert({1, 0});
    CHECK(midpoint_set(w).points.size() == 2);  // (1,0) excluded, halves remain
}

TEST_CASE("minkowski sums and the 1d doubling inequality") {
    PointSet a = one_d({0, 1, 3});
    PointSet s = minkowski_sum(a, a);
    CHECK(s.size() == 6);  // 0 1 2 3 4 6
    CHECK(s == k_fold_sum(a, 2));
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        PointSet r(1);
        int sz = 2 + static_cast<int>(rng.below(7));
        while (static_cast<int>(r.size()) < sz) r.insert({rng.signed_below(40)});
        CHECK(minkowski_sum(r, r).size() >= 2 * r.size() - 1);
    }
    CHECK_THROWS_AS(k_fold_sum(one_d({0, 1, 10, 100, 1000, 10000, 100000}), 9, 100),
                    std::length_error);
}

TEST_CASE("difference set and parity classes") {
    PointSet a = one_d({0, 2});
    PointSet d = difference_set(a, a);
    CHECK(d.size() == 3);  // -2 0 2
    PointSet v(2);
    v.insert({0, 0});
    v.insert({1, 1});
    v.insert({2, 0});
    v.insert({3, 1});
    ParityPartition classes = parity_partition(v);
    CHECK(classes.size() == 2);
    CHECK(classes.at({0, 0}).size() == 2);
    CHECK(classes.at({1, 1}).size() == 2);
    // same-parity pairs have integral midpoints
    const PointSet& even = classes.at({0, 0});
    for (const auto& p : even)
        for (const auto& q : even) {
            CHECK(mpz_class((p[0] + q[0]) % 2) == 0);
            CHECK(mpz_class((p[1] + q[1]) % 2) == 0);
        }
}

TEST_CASE("triangulation lower bound on planar midpoints") {
    PointSet collinear(2);
    collinear.insert({0, 0});
    collinear.insert({2, 2});
    collinear.insert({4, 4});
    CHECK(triangulation_midpoint_bound(collinear) == 2);
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Point> raw;
        for (int i = 0; i < 12; ++i)
            raw.push_back({3 * rng.signed_below(25), 3 * rng.signed_below(25)});
        std::vector<Point> h = hull2d(raw);
        if (h.size() < 3) continue;
        PointSet v(2, h);
        CHECK(in_convex_position(v));
        long bound = triangulation_midpoint_bound(v);
        CHECK(bound == 2 * static_cast<long>(v.size()) - 3);
        CHECK(static_cast<long>(midpoint_set(v).points.size()) >= bound);
    }
}

TEST_CASE("five point average solutions in 1d") {
    // 0+1+2+4+8 = 15 = 5*3 with 3 in the set and distinct from the five.
    PointSet a = one_d({0, 1, 2, 3, 4, 8});
    auto sol = find_avg5_solution(a);
    REQUIRE(sol.has_value());
    mpz_class sum = 0;
    for (int i = 0; i < 5; ++i) sum += (*sol)[i];
    CHECK(sum == 5 * (*sol)[5]);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) CHECK((*sol)[i] != (*sol)[j]);
    CHECK_FALSE(has_avg5_solution(one_d({0, 1, 2, 3, 4})));  // needs six points
    CHECK_FALSE(has_avg5_solution(one_d({0, 1, 2, 3, 4, 100})));
}

TEST_CASE("plunnecke-ruzsa inequality on samples") {
    for (auto xs : {std::initializer_list<long>{0, 1, 3},
                    {0, 1, 2, 3},
                    {0, 5, 7, 11, 13},
                    {-4, -1, 0, 2, 9}}) {
        PlunneckeCheck c = plunnecke_check(one_d(xs));
        CHECK(c.holds);
        CHECK(c.lhs <= c.rhs);
    }
    PointSet big(1);
    for (long i = 0; i < 13; ++i) big.insert({i * i});
    CHECK_THROWS_AS(plunnecke_check(big), std::length_error);
}
