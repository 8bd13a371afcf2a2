#pragma once

#include <vector>

#include "latgeo/numeric.hpp"

namespace latgeo::lp {

enum class Status { Optimal, Infeasible, Unbounded };
enum class RowType { LE, EQ };

// max c.x subject to the rows; variables are free unless marked nonneg.
struct Problem {
    int nvars = 0;
    std::vector<mpq_class> objective;
    std::vector<std::vector<mpq_class>> coeffs;
    std::vector<mpq_class> rhs;
    std::vector<RowType> types;
    std::vector<bool> nonneg;

    void add_row(std::vector<mpq_class> a, mpq_class b, RowType t = RowType::LE) {
        coeffs.push_back(std::move(a));
        rhs.push_back(std::move(b));
        types.push_back(t);
    }
};

struct Result {
    Status status = Status::Infeasible;
    mpq_class value;
    std::vector<mpq_class> x;
};

// Two-phase dense simplex with Bland's rule; all arithmetic exact.
Result solve(const Problem& problem);

}  // namespace latgeo::lp
