#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/geom.hpp"
#include "latgeo/hull.hpp"

using namespace latgeo;

namespace {

HRep unit_square(long side) {
    HRep p;
    p.dim = 2;
    p.add_row({make_q(1), make_q(0)}, side);
    p.add_row({make_q(-1), make_q(0)}, 0);
    p.add_row({make_q(0), make_q(1)}, side);
    p.add_row({make_q(0), make_q(-1)}, 0);
    return p;
}

}  // namespace

TEST_CASE("boundedness is decided exactly") {
    CHECK(is_bounded(unit_square(3)));
    HRep half;
    half.dim = 2;
    half.add_row({make_q(1), make_q(0)}, 1);
    CHECK_FALSE(is_bounded(half));
    HRep strip = half;
    strip.add_row({make_q(-1), make_q(0)}, 1);
    CHECK_FALSE(is_bounded(strip));  // free y direction
}

TEST_CASE("lattice enumeration of a box polyhedron") {
    PointSet pts = enumerate_lattice_points(unit_square(2));
    CHECK(pts.size() == 9);
    CHECK(pts.contains({0, 0}));
    CHECK(pts.contains({2, 2}));
    CHECK_FALSE(pts.contains({3, 0}));
    HRep half;
    half.dim = 2;
    half.add_row({make_q(1), make_q(0)}, 1);
    CHECK_THROWS_AS(enumerate_lattice_points(half), std::domain_error);
}

TEST_CASE("integer hull of a triangle") {
    PointSet tri(2);
    tri.insert({0, 0});
    tri.insert({4, 0});
    tri.insert({0, 4});
    IntegerHull hull = integer_hull(tri);
    CHECK(hull.vertices.size() == 3);
    CHECK(hull.all_points.size() == 15);  // area 8, boundary 12, interior 3
    CHECK(hull.all_points.contains({1, 1}));
    CHECK_FALSE(hull.all_points.contains({3, 3}));
}

TEST_CASE("convex position predicate") {
    PointSet square(2);
    square.insert({0, 0});
    square.insert({1, 0});
    square.insert({0, 1});
    square.insert({1, 1});
    CHECK(in_convex_position(square));
    square.insert({0, 2});  // makes (0,1) a relative-interior boundary point
    CHECK_FALSE(in_convex_position(square));
}

TEST_CASE("planar hull and pick statistics") {
    std::vector<Point> pts = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {1, 0}};
    std::vector<Point> h = hull2d(pts);
    REQUIRE(h.size() == 4);
    CHECK(h[0] == Point{0, 0});
    PolygonStats st = pick_stats(h);
    CHECK(st.vertex_count == 4);
    CHECK(st.area == 16);
    CHECK(st.boundary_nonvertex == 12);
    CHECK(st.interior_count == 9);
    // Pick: A = i + b/2 - 1 with b = v + boundary_nonvertex.
    CHECK(st.area == st.interior_count + make_q(st.vertex_count + st.boundary_nonvertex, 2) - 1);
}

TEST_CASE("three dimensional hull facets and edges") {
    PointSet cube(3);
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) cube.insert({x, y, z});
    std::vector<Point> ext = extreme_points(cube);
    CHECK(ext.size() == 8);
    CHECK(hull_facets(cube).size() == 6);
    CHECK(hull_edges(ext).size() == 12);
}
