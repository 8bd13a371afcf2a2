#pragma once

#include <optional>

#include "latgeo/hrep.hpp"
#include "latgeo/hull.hpp"
#include "latgeo/point.hpp"

namespace latgeo {

// True iff the recession cone {x : Ax <= 0} is {0}; decided exactly by
// maximizing each +-coordinate over the cone intersected with the unit box.
bool is_bounded(const HRep& hrep);

// Exact coordinate-wise bounds of a nonempty bounded polyhedron.
// Returns nullopt when the polyhedron is empty.
std::optional<std::pair<QPoint, QPoint>> rational_bounds(const HRep& hrep);

// Smallest integer box containing the polyhedron; nullopt when empty.
std::optional<Box> integer_bounding_box(const HRep& hrep);

// All integer points of P (intersected with box when given). Throws
// std::domain_error("unbounded enumeration") if P is unbounded and no box
// is supplied.
PointSet enumerate_lattice_points(const HRep& hrep, const std::optional<Box>& box = std::nullopt);

struct IntegerHull {
    PointSet vertices;    // extreme points of conv(S)
    PointSet all_points;  // conv(S) intersected with the integer lattice
};

// conv(S) n Z^n together with its vertex set.
IntegerHull integer_hull(const PointSet& s);

// True iff every point of S is a vertex of conv(S).
bool in_convex_position(const PointSet& s);

// Bounding box of a finite point set.
Box bounding_box(const PointSet& s);

}  // namespace latgeo
