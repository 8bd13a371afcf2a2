#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latgeo/canonical.hpp"
#include "latgeo/hrep.hpp"
#include "latgeo/point.hpp"

namespace latgeo {

struct SearchCertificate {
    std::string canonicalization = "edge-anchored";
    bool exhaustive = false;
    std::uint64_t nodes_visited = 0;
    long vertex_cap = 0;
    long twice_area_cap = 0;  // 2A, kept integral
    long width_cap = 0;       // lattice-width cap: w <= floor(sqrt(4A))
    long extent_cap = 0;      // reduced x-extent: X <= 4A/w <= 4A
};

struct AlphaResult {
    long value = 0;
    PointSet witness;
    SearchCertificate certificate;
};

struct EllResult {
    long value = 0;
    PointSet witness;  // polygon attaining value-1 vertices
    SearchCertificate certificate;
};

struct MuResult {
    long value = 0;        // grid minimum: an upper bound on mu_c(n,s)
    long lower_bound = 0;  // certified lower bound (exact when equal)
    PointSet witness;
    SearchCertificate certificate;
};

// Exhaustive planar search: the largest vertex count of a convex lattice
// polygon whose hull contains exactly k non-vertex lattice points. The
// region caps are theorem-backed, so the certificate is exhaustive.
AlphaResult alpha_search(long k, int threads = 1);

// ell(2,k) = 1 + max over 0 <= i <= k-1 of alpha_search(i).
EllResult ell_search(long k, int threads = 1);

// Minimum |midpoint_set(V)| over s-point convex-position subsets of the
// grid; an upper bound on mu_c(n,s), exact when it meets lower_bound.
MuResult mu_c_search(int n, long s, const Box& grid);

// Least s whose certified mu_c lower bound reaches k.
long s_nk(int n, long k);

struct BracketResult {
    long k = 0;
    mpz_class lower;
    mpz_class upper;
    std::string lower_source;
    std::string upper_source;
    std::optional<mpz_class> cited_upper;  // literature value not mechanized here
    std::string cited_source;
    bool exhaustive = false;
};

BracketResult c2_bracket(long k, int threads = 1);

// Exactly one representative per unimodular class of convex lattice
// polygons within the caps, in deterministic (vertex count, id) order.
std::vector<CanonicalPolygon> enumerate_convex_configs(long vertex_budget, long twice_area_cap);

// Independent oracle: maximum size of a convex-position subset of the grid
// with exactly k hull lattice points outside the subset; no canonicalization.
long alpha_bruteforce(long k, const Box& grid);

}  // namespace latgeo
