#pragma once

#include <stdexcept>
#include <vector>

#include "latgeo/point.hpp"

namespace latgeo {

// One inequality a . x <= b with rational data and nonzero normal.
struct HalfSpace {
    QPoint normal;
    mpq_class offset;

    bool satisfied_by(const Point& x) const {
        mpq_class s = 0;
        for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
        return s <= offset;
    }

    mpq_class value_at(const Point& x) const {
        mpq_class s = 0;
        for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
        return s;
    }

    mpq_class value_at_q(const QPoint& x) const { return dot_q(normal, x); }
};

// Rational inequality system A x <= b.
struct HRep {
    int dim = 0;
    std::vector<HalfSpace> rows;

    void add_row(QPoint normal, mpq_class offset) {
        if (static_cast<int>(normal.size()) != dim)
            throw std::invalid_argument("normal dimension mismatch");
        bool all_zero = true;
        for (const auto& c : normal)
            if (c != 0) { all_zero = false; break; }
        if (all_zero) throw std::invalid_argument("zero normal in inequality system");
        rows.push_back({std::move(normal), std::move(offset)});
    }

    bool contains(const Point& x) const {
        for (const auto& r : rows)
            if (!r.satisfied_by(x)) return false;
        return true;
    }

    bool strictly_contains(const Point& x) const {
        for (const auto& r : rows)
            if (r.value_at(x) >= r.offset) return false;
        return true;
    }

    HRep without_row(std::size_t i) const {
        HRep out;
        out.dim = dim;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i) out.rows.push_back(rows[j]);
        return out;
    }
};

// Axis-aligned integer box, inclusive on both ends.
struct Box {
    Point lo, hi;

    bool contains(const Point& x) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        return true;
    }

    mpz_class cell_count() const {
        mpz_class n = 1;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (hi[i] < lo[i]) return 0;
            n *= hi[i] - lo[i] + 1;
        }
        return n;
    }

    Box inflated(const mpz_class& amount) const {
        Box b = *this;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            b.lo[i] -= amount;
            b.hi[i] += amount;
        }
        return b;
    }
};

// Visits every integer point of the box in lexicographic order.
template <typename Fn>
void for_each_lattice_point(const Box& box, Fn&& fn) {
    const std::size_t n = box.lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (box.hi[i] < box.lo[i]) return;
    Point x = box.lo;
    while (true) {
        fn(const_cast<const Point&>(x));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] < box.hi[i]) {
                ++x[i];
                for (std::size_t j = i + 1; j < n; ++j) x[j] = box.lo[j];
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace latgeo
