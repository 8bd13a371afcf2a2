#pragma once

#include <optional>
#include <vector>

#include "latgeo/hrep.hpp"
#include "latgeo/point.hpp"

namespace latgeo {

// Counterclockwise hull of 2D lattice points, collinear points dropped.
// Starts at the lexicographically smallest vertex. Collinear input yields
// the two endpoints; a single point yields itself.
std::vector<Point> hull2d(std::vector<Point> pts);
std::vector<QPoint> hull2d_q(std::vector<QPoint> pts);

// Exact membership of q in conv(S); any dimension, degenerate S allowed.
bool in_convex_hull(const QPoint& q, const std::vector<QPoint>& hull_points);
bool in_convex_hull(const Point& q, const PointSet& s);

// p is an extreme point of conv(S) iff p is not in conv(S \ {p}).
bool is_extreme_point(std::size_t index, const std::vector<QPoint>& pts);

// Extreme points of S in lexicographic order; works in any dimension.
std::vector<Point> extreme_points(const PointSet& s);

// Hyperplane description of conv(S) for full-dimensional S, n <= 4,
// by exhaustive support-hyperplane search over n-subsets. Normals are
// primitive integer vectors (input must be integral).
std::vector<HalfSpace> hull_facets(const PointSet& s);

// Edges (1-faces) of conv(S) among the given extreme points, decided by a
// supporting-functional LP. Quadratic in the vertex count.
std::vector<std::pair<std::size_t, std::size_t>> hull_edges(const std::vector<Point>& vertices);

struct PolygonStats {
    long vertex_count = 0;      // v
    long boundary_nonvertex = 0;  // b
    long interior_count = 0;    // i
    mpq_class area;             // exact shoelace area
    bool degenerate = false;    // zero area; Pick identity not applicable
};

// Exact (v, b, i, area) of a convex positively oriented lattice polygon.
// b via edge gcds, i by direct scanline count, area by shoelace.
PolygonStats pick_stats(const std::vector<Point>& polygon);

// Twice the signed area of a closed polygon.
mpz_class shoelace_twice(const std::vector<Point>& polygon);

// Number of lattice points on the closed segment [a, b], endpoints included.
mpz_class segment_lattice_count(const Point& a, const Point& b);

}  // namespace latgeo
