#pragma once

#include <string>
#include <vector>

#include "latgeo/point.hpp"

namespace latgeo {

// Normal form of a convex lattice polygon under unimodular transforms and
// integer translations: equivalent polygons share the same id.
struct CanonicalPolygon {
    std::vector<Point> vertices;  // counterclockwise, anchored at the origin
    std::string id;
};

// Edge-anchored normal form. For each (vertex, orientation) anchor the
// polygon is translated to put the anchor at the origin, mapped by a
// unimodular matrix sending the primitive first-edge direction to (1,0)
// (reflecting reversed traversals back to counterclockwise), and the
// residual shear is pinned by reducing the last vertex's x modulo its y.
// The lexicographically least serialization over all 2v anchors is the id.
// Throws std::invalid_argument when the input is not in convex position.
CanonicalPolygon canonicalize(const std::vector<Point>& polygon);
CanonicalPolygon canonicalize(const PointSet& polygon);

}  // namespace latgeo
