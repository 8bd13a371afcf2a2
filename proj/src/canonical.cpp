#include "latgeo/canonical.hpp"

#include <stdexcept>

#include "latgeo/hull.hpp"

namespace latgeo {

namespace {

std::string serialize(const std::vector<Point>& seq) {
    std::string s;
    for (const auto& p : seq) {
        s += p[0].get_str();
        s += ',';
        s += p[1].get_str();
        s += ';';
    }
    return s;
}

// One candidate normal form: traversal of the hull cycle starting at
// `start`, counterclockwise when forward, clockwise otherwise.
std::vector<Point> candidate(const std::vector<Point>& hull, std::size_t start, bool forward) {
    const std::size_t v = hull.size();
    std::vector<Point> seq(v);
    for (std::size_t j = 0; j < v; ++j) {
        std::size_t idx = forward ? (start + j) % v : (start + 2 * v - j) % v;
        seq[j] = sub(hull[idx], hull[start]);
    }
    if (v == 1) return seq;
    // Unimodular map sending the primitive first-edge direction (a,b) to
    // (1,0): rows (u,w) and (-b,a) with a*u + b*w = 1.
    mpz_class a = seq[1][0], b = seq[1][1];
    mpz_class g, u, w;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // a*u + b*w = g, so the primitive (a/g, b/g) pairs with (u, w) to 1.
    a /= g;
    b /= g;
    for (auto& p : seq) {
        mpz_class x = u * p[0] + w * p[1];
        mpz_class y = -b * p[0] + a * p[1];
        p[0] = x;
        p[1] = forward ? y : mpz_class(-y);
    }
    if (v >= 3) {
        // Pin the residual shear (x,y) -> (x+m*y, y): all vertices past the
        // first edge have y > 0; reduce the last vertex's x into [0, y).
        const mpz_class& ty = seq[v - 1][1];
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), seq[v - 1][0].get_mpz_t(), ty.get_mpz_t());
        mpz_class m = (r - seq[v - 1][0]) / ty;
        for (auto& p : seq) p[0] += m * p[1];
    }
    return seq;
}

}  // namespace

CanonicalPolygon canonicalize(const std::vector<Point>& polygon) {
    for (const auto& p : polygon)
        if (p.size() != 2) throw std::invalid_argument("canonicalize: planar polygons only");
    std::vector<Point> hull = hull2d(polygon);
    if (hull.size() != polygon.size())
        throw std::invalid_argument("canonicalize: input not in convex position");
    CanonicalPolygon best;
    for (std::size_t start = 0; start < hull.size(); ++start) {
        for (bool forward : {true, false}) {
            std::vector<Point> seq = candidate(hull, start, forward);
            std::string id = serialize(seq);
            if (best.id.empty() || id < best.id) {
                best.id = std::move(id);
                best.vertices = std::move(seq);
            }
        }
    }
    return best;
}

CanonicalPolygon canonicalize(const PointSet& polygon) {
    return canonicalize(polygon.points());
}

}  // namespace latgeo
