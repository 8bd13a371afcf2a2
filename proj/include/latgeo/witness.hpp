#pragma once

#include <string>
#include <vector>

#include "latgeo/point.hpp"

namespace latgeo {

struct WitnessConfig {
    std::string name;
    int dim = 0;
    PointSet v;
    long expected_nonvertex = 0;
    long expected_size = 0;
};

struct WitnessVerification {
    bool ok = false;
    long actual_k = 0;
    long size = 0;
    bool convex_position = false;
    PointSet nonvertex;  // hull lattice points missing from V
};

// V = ({-1,0}^n u {0,1}^n) \ {0}: |V| = 2(2^n - 1) vertices whose integer
// hull gains exactly the origin.
WitnessConfig k1_witness(int n);

// V = ({-1,0}^n u {0,1}^n u {2*ones}) \ {0, ones}: same size, the hull gains
// the two diagonal points 0 and ones.
WitnessConfig k2_witness(int n);

// Generalizes k2_witness: 2*ones replaced by k*ones, gaining the k collinear
// diagonal points 0, ones, ..., (k-1)*ones. Requires k >= 2.
WitnessConfig collinear_witness(int n, long k);

// The three literal planar configurations: hexagon (6 vertices, 2 gained),
// octagon (8, 4), heptagon (7, 5).
std::vector<WitnessConfig> figure_witnesses();

WitnessVerification verify_witness(const PointSet& v, long expected_k);

}  // namespace latgeo
