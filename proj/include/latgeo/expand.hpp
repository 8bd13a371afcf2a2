#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latgeo/hrep.hpp"
#include "latgeo/point.hpp"

namespace latgeo {

struct RowWitness {
    bool redundant = true;
    bool unbounded_relaxation = false;  // dropping the row frees a recession ray
    std::optional<Point> witness;       // lattice point gained when the row is dropped
};

struct NonRedundancyReport {
    std::vector<RowWitness> rows;
    Box box;

    bool all_non_redundant() const {
        for (const auto& r : rows)
            if (r.redundant) return false;
        return true;
    }
};

// For each row, searches the box for a lattice point satisfying every other
// row but violating this one; rows whose removal unbounds the polyhedron
// are flagged as non-redundant even without an in-box witness.
NonRedundancyReport non_redundant_check(const HRep& p, const Box& box);

struct ExpansionResult {
    HRep expanded;                    // the enlarged polyhedron
    std::vector<Point> facet_points;  // one lattice point per row, row-aligned
    PointSet original_interior;       // lattice points of the input
    Box working_box;                  // the bounded region the construction used
    long inflation = 0;               // coordinate inflation applied to the input box
    std::uint64_t seed = 0;
    int attempts = 0;                 // perturbation rounds consumed
};

// Enlarges a bounded non-redundant system so that every facet of the result
// carries exactly one lattice point in its relative interior while the
// interior lattice set stays exactly the input's lattice set, and the m
// facet points are distinct and in convex position. Random rational
// perturbations stand in for the generic real ones; every postcondition is
// re-verified by exact enumeration, with reseeding on failure (budget 32).
ExpansionResult bell_expand(const HRep& p, std::uint64_t seed = 786431);

// Relaxes nothing and tightens every row except `keep` just enough that the
// lattice set becomes original_interior plus the kept facet's point:
// the one-more-lattice-point step.
HRep shrink_one_facet(const ExpansionResult& res, std::size_t keep);

}  // namespace latgeo
