#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "latgeo/point.hpp"

namespace latgeo {

// M(V): exact midpoints of pairs from V that are not themselves in V.
// Denominators are 1 or 2 by construction.
struct MidpointSet {
    std::set<QPoint> points;
    std::size_t source_size = 0;
};

MidpointSet midpoint_set(const PointSet& v);

PointSet minkowski_sum(const PointSet& a, const PointSet& b);

// k-fold sum A + ... + A, guarded against combinatorial blowup.
PointSet k_fold_sum(const PointSet& a, int k, std::size_t size_guard = 2'000'000);

PointSet difference_set(const PointSet& a, const PointSet& b);

// Classes of points congruent coordinate-wise mod 2, keyed by the parity
// vector in {0,1}^n.
using ParityPartition = std::map<std::vector<int>, PointSet>;

ParityPartition parity_partition(const PointSet& v);

// Lower bound on |M(V)| for planar V: |V|-1 when collinear, else 2|V|-3.
long triangulation_midpoint_bound(const PointSet& v);

// Distinct x1..x6 in A (1D) with x1+...+x5 = 5*x6; returns the witness.
std::optional<std::array<mpz_class, 6>> find_avg5_solution(const PointSet& a);

inline bool has_avg5_solution(const PointSet& a) { return find_avg5_solution(a).has_value(); }

struct PlunneckeCheck {
    mpz_class lhs;        // |5A - 5A|
    mpq_class rhs;        // (|A+A|/|A|)^10 * |A|
    bool holds = false;
};

// |5A-5A| <= (|A+A|/|A|)^10 |A|; a theorem, so holds must be true.
// Throws std::length_error when |A| exceeds the guard.
PlunneckeCheck plunnecke_check(const PointSet& a, std::size_t size_guard = 12);

}  // namespace latgeo
