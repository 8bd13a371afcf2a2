#include "latgeo/witness.hpp"

#include <stdexcept>

#include "latgeo/bounds.hpp"
#include "latgeo/geom.hpp"

namespace latgeo {

namespace {

Point diagonal(int n, long value) { return Point(n, mpz_class(value)); }

// {lo,hi}^n cube corners inserted into dst.
void insert_cube(PointSet& dst, int n, long lo, long hi) {
    Point p(n);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        for (int c = 0; c < n; ++c) p[c] = (mask >> c & 1) ? hi : lo;
        dst.insert(p);
    }
}

}  // namespace

WitnessConfig k1_witness(int n) {
    if (n < 1) throw std::invalid_argument("k1_witness: n must be >= 1");
    WitnessConfig cfg;
    cfg.name = "k1";
    cfg.dim = n;
    cfg.v = PointSet(n);
    insert_cube(cfg.v, n, -1, 0);
    insert_cube(cfg.v, n, 0, 1);
    cfg.v.erase(diagonal(n, 0));
    cfg.expected_nonvertex = 1;
    cfg.expected_size = mpz_class(2 * (pow2(n) - 1)).get_si();
    return cfg;
}

WitnessConfig collinear_witness(int n, long k) {
    if (n < 1) throw std::invalid_argument("collinear_witness: n must be >= 1");
    if (k < 2) throw std::invalid_argument("collinear_witness: k must be >= 2");
    WitnessConfig cfg;
    cfg.name = k == 2 ? "k2" : "collinear";
    cfg.dim = n;
    cfg.v = PointSet(n);
    insert_cube(cfg.v, n, -1, 0);
    insert_cube(cfg.v, n, 0, 1);
    cfg.v.insert(diagonal(n, k));
    cfg.v.erase(diagonal(n, 0));
    cfg.v.erase(diagonal(n, 1));
    cfg.expected_nonvertex = k;
    cfg.expected_size = mpz_class(2 * (pow2(n) - 1)).get_si();
    return cfg;
}

WitnessConfig k2_witness(int n) { return collinear_witness(n, 2); }

std::vector<WitnessConfig> figure_witnesses() {
    auto make = [](const char* name, std::vector<std::vector<long>> coords, long k) {
        WitnessConfig cfg;
        cfg.name = name;
        cfg.dim = 2;
        cfg.v = PointSet(2);
        for (const auto& c : coords) cfg.v.insert(Point{mpz_class(c[0]), mpz_class(c[1])});
        cfg.expected_nonvertex = k;
        cfg.expected_size = static_cast<long>(coords.size());
        return cfg;
    };
    return {
        make("hexagon", {{0, 0}, {0, 1}, {1, 2}, {3, 3}, {2, 1}, {1, 0}}, 2),
        make("octagon", {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}}, 4),
        make("heptagon", {{1, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 2}, {3, 1}}, 5),
    };
}

WitnessVerification verify_witness(const PointSet& v, long expected_k) {
    WitnessVerification out;
    out.size = static_cast<long>(v.size());
    out.convex_position = in_convex_position(v);
    IntegerHull hull = integer_hull(v);
    out.nonvertex = PointSet(v.dim());
    for (const auto& p : hull.all_points.points())
        if (!v.contains(p)) out.nonvertex.insert(p);
    out.actual_k = static_cast<long>(out.nonvertex.size());
    out.ok = out.convex_position && out.actual_k == expected_k;
    return out;
}

}  // namespace latgeo
