#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/expand.hpp"
#include "latgeo/geom.hpp"

using namespace latgeo;

namespace {

HRep square(long side) {
    HRep p;
    p.dim = 2;
    p.add_row({make_q(1), make_q(0)}, side);
    p.add_row({make_q(-1), make_q(0)}, 0);
    p.add_row({make_q(0), make_q(1)}, side);
    p.add_row({make_q(0), make_q(-1)}, 0);
    return p;
}

HRep triangle() {
    HRep p;
    p.dim = 2;
    p.add_row({make_q(-1), make_q(0)}, 0);
    p.add_row({make_q(0), make_q(-1)}, 0);
    p.add_row({make_q(1), make_q(1)}, 3);
    return p;
}

void check_postconditions(const HRep& input, const ExpansionResult& res) {
    const std::size_t m = input.rows.size();
    REQUIRE(res.facet_points.size() == m);
    // facet points are distinct and each lies strictly inside all other rows
    for (std::size_t i = 0; i < m; ++i) {
        const Point& v = res.facet_points[i];
        CHECK(res.expanded.rows[i].value_at(v) == res.expanded.rows[i].offset);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            CHECK(res.expanded.rows[j].value_at(v) < res.expanded.rows[j].offset);
            CHECK(res.facet_points[i] != res.facet_points[j]);
        }
    }
    // interior lattice points of the expansion are exactly the input's points
    PointSet inside(input.dim);
    for (const auto& x : enumerate_lattice_points(res.expanded))
        if (res.expanded.strictly_contains(x)) inside.insert(x);
    CHECK(inside == res.original_interior);
    CHECK(res.original_interior == enumerate_lattice_points(input));
}

}  // namespace

TEST_CASE("row redundancy witnesses") {
    HRep p = square(2);
    p.add_row({make_q(1), make_q(1)}, 10);  // redundant
    Box box{{-5, -5}, {15, 15}};
    NonRedundancyReport rep = non_redundant_check(p, box);
    REQUIRE(rep.rows.size() == 5);
    for (int i = 0; i < 4; ++i) CHECK_FALSE(rep.rows[i].redundant);
    CHECK(rep.rows[4].redundant);
    CHECK_FALSE(rep.all_non_redundant());
    HRep clean = square(2);
    NonRedundancyReport clean_rep = non_redundant_check(clean, box);
    CHECK(clean_rep.all_non_redundant());
    // dropping any side of the bare square unbounds the polyhedron
    for (const auto& row : clean_rep.rows) CHECK(row.unbounded_relaxation);
}

TEST_CASE("expansion of a square") {
    HRep p = square(1);
    ExpansionResult res = bell_expand(p, 2024);
    CHECK(res.original_interior.size() == 4);
    check_postconditions(p, res);
}

TEST_CASE("expansion of a triangle") {
    HRep p = triangle();
    ExpansionResult res = bell_expand(p, 7);
    CHECK(res.original_interior.size() == 10);
    check_postconditions(p, res);
}

TEST_CASE("expansion is seed deterministic") {
    ExpansionResult a = bell_expand(square(2), 99);
    ExpansionResult b = bell_expand(square(2), 99);
    CHECK(a.facet_points == b.facet_points);
    CHECK(a.attempts == b.attempts);
    for (std::size_t i = 0; i < a.expanded.rows.size(); ++i)
        CHECK(a.expanded.rows[i].offset == b.expanded.rows[i].offset);
}

TEST_CASE("shrinking one facet gains exactly its point") {
    HRep p = square(1);
    ExpansionResult res = bell_expand(p, 5);
    for (std::size_t keep = 0; keep < p.rows.size(); ++keep) {
        PointSet grown = enumerate_lattice_points(shrink_one_facet(res, keep));
        CHECK(grown.size() == res.original_interior.size() + 1);
        CHECK(grown.contains(res.facet_points[keep]));
        for (const auto& x : res.original_interior) CHECK(grown.contains(x));
    }
}

TEST_CASE("unbounded or empty inputs are rejected") {
    HRep half;
    half.dim = 2;
    half.add_row({make_q(1), make_q(0)}, 1);
    CHECK_THROWS_AS(bell_expand(half, 1), std::invalid_argument);
    HRep empty = square(1);
    empty.add_row({make_q(1), make_q(0)}, -10);
    CHECK_THROWS_AS(bell_expand(empty, 1), std::invalid_argument);
}

TEST_CASE("three dimensional expansion") {
    HRep cube;
    cube.dim = 3;
    for (int i = 0; i < 3; ++i) {
        QPoint pos(3, mpq_class(0)), neg(3, mpq_class(0));
        pos[i] = 1;
        neg[i] = -1;
        cube.add_row(pos, 1);
        cube.add_row(neg, 0);
    }
    ExpansionResult res = bell_expand(cube, 31);
    CHECK(res.original_interior.size() == 8);
    check_postconditions(cube, res);
}
