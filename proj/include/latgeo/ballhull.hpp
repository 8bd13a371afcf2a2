#pragma once

#include <cstdint>
#include <vector>

#include "latgeo/point.hpp"

namespace latgeo {

// Euclidean ball {x : ||x - center|| <= radius} with exact rational data.
struct BallSpec {
    int dim = 0;
    QPoint center;
    mpq_class radius;
};

// The scaling family rB(u,1) = B(ru, r); requires ||u|| < 1.
BallSpec scaled_ball(int n, const QPoint& u, const mpq_class& r);

PointSet ball_lattice_points(const BallSpec& spec);

struct BallHullStats {
    mpz_class n_count;      // lattice points in the ball
    long v_count = 0;       // hull vertices
    mpz_class k_count;      // non-vertex lattice points, n_count - v_count
    mpq_class max_edge_sq;  // squared length of the longest hull edge
    // Informational slack of the inner-ball containment, in squared units:
    // min facet distance^2 minus a certified lower bound on (r - sqrt(n))^2.
    // The pass/fail decision lives in inner_ball_check, which is exact.
    mpq_class inner_margin;
};

BallHullStats ball_hull_stats(const BallSpec& spec);

// Every hull facet lies at center-distance >= radius - sqrt(n); exact
// comparison of quadratic irrationalities. Requires radius > sqrt(n).
bool inner_ball_check(const BallSpec& spec);

// Longest hull edge satisfies length^2 <= 16 sqrt(n) radius; exact.
// Requires radius > sqrt(n).
bool max_edge_check(const BallSpec& spec);

// Random rational u with ||u|| < 1 such that along the scaling family the
// lattice points enter one at a time (verified over scan_count entries,
// reseeding on failure).
QPoint generic_center(int n, std::uint64_t seed, unsigned precision_bits = 64,
                      long scan_count = 64);

// Lattice points ordered by entry radius along r -> B(ru, r); the first i
// points are exactly B(r_i u, r_i) n Z^n where r_i is the i-th entry
// radius. Throws when two entry radii coincide (genericity violation).
std::vector<Point> radius_sequence(const QPoint& u, long n_target);

struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double residual = 0;  // root mean square in log space
    double target = 0;    // n(n-1)/(n+1)
    std::vector<long> radii;
    std::vector<long> vertex_counts;
};

// Least-squares fit of log v_r against log r over the scaling family.
// Requires >= 5 radii spanning at least one decade.
ExponentFit exponent_fit(int n, const std::vector<long>& radii, const QPoint& u);

struct MuBallBound {
    long s = 0;           // size of the dominant parity class found
    long midpoints = 0;   // |M(class)|, an empirical mu_c(n,s) upper bound
    mpz_class n_at_radius;  // lattice count when the class was found
    long radius_index = 0;
    PointSet parity_class;
};

MuBallBound mu_upper_from_ball(int n, long s, const QPoint& u, long scan_cap = 4000);

}  // namespace latgeo
