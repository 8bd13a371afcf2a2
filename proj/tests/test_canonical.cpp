#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latgeo/canonical.hpp"

using namespace latgeo;

namespace {

std::vector<Point> apply(const std::vector<Point>& poly, long a, long b, long c, long d,
                         long tx, long ty) {
    // unimodular map (a b; c d) with |ad - bc| = 1, then translation
    std::vector<Point> out;
    for (const auto& p : poly)
        out.push_back({a * p[0] + b * p[1] + tx, c * p[0] + d * p[1] + ty});
    return out;
}

const std::vector<Point> kHexagon = {{0, 0}, {1, 0}, {2, 1}, {3, 3}, {1, 2}, {0, 1}};

}  // namespace

TEST_CASE("id is invariant under translation rotation and shear") {
    CanonicalPolygon base = canonicalize(kHexagon);
    CHECK(!base.id.empty());
    // translation
    CHECK(canonicalize(apply(kHexagon, 1, 0, 0, 1, 17, -9)).id == base.id);
    // quarter turn (0 -1; 1 0)
    CHECK(canonicalize(apply(kHexagon, 0, -1, 1, 0, 0, 0)).id == base.id);
    // shear (1 3; 0 1)
    CHECK(canonicalize(apply(kHexagon, 1, 3, 0, 1, -2, 5)).id == base.id);
    // reflection (0 1; 1 0), determinant -1, also a lattice symmetry
    CHECK(canonicalize(apply(kHexagon, 0, 1, 1, 0, 0, 0)).id == base.id);
    // composite
    CHECK(canonicalize(apply(kHexagon, 2, 1, 1, 1, 100, 100)).id == base.id);
}

TEST_CASE("vertex order does not matter") {
    PointSet s(2);
    for (const auto& p : kHexagon) s.insert(p);
    CHECK(canonicalize(s).id == canonicalize(kHexagon).id);
}

TEST_CASE("distinct classes get distinct ids") {
    std::vector<Point> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<Point> big_square = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    std::vector<Point> triangle = {{0, 0}, {1, 0}, {0, 1}};
    std::vector<Point> wide_triangle = {{0, 0}, {2, 0}, {0, 1}};
    CanonicalPolygon s = canonicalize(square);
    CHECK(s.id != canonicalize(big_square).id);
    CHECK(s.id != canonicalize(triangle).id);
    CHECK(canonicalize(triangle).id != canonicalize(wide_triangle).id);
    // but any unimodular image of the wide triangle collapses to one id
    CHECK(canonicalize(apply(wide_triangle, 1, 0, 1, 1, 3, 3)).id ==
          canonicalize(wide_triangle).id);
}

TEST_CASE("canonical vertices are anchored and positively oriented") {
    CanonicalPolygon c = canonicalize(kHexagon);
    REQUIRE(c.vertices.size() == 6);
    CHECK(c.vertices[0] == Point{0, 0});
    mpz_class twice_area = 0;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const Point& p = c.vertices[i];
        const Point& q = c.vertices[(i + 1) % c.vertices.size()];
        twice_area += p[0] * q[1] - p[1] * q[0];
    }
    CHECK(twice_area > 0);
}

TEST_CASE("non convex input is rejected") {
    std::vector<Point> bad = {{0, 0}, {2, 0}, {1, 0}, {0, 2}};  // (1,0) not a vertex
    CHECK_THROWS_AS(canonicalize(bad), std::invalid_argument);
}
