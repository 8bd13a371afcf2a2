#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "latgeo/numeric.hpp"

namespace latgeo {

using Point = std::vector<mpz_class>;    // integer lattice point
using QPoint = std::vector<mpq_class>;   // exact rational point

inline QPoint to_rational(const Point& p) {
    QPoint q;
    q.reserve(p.size());
    for (const auto& c : p) q.emplace_back(c);
    return q;
}

inline bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool lex_less_q(const QPoint& a, const QPoint& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Ordered set of distinct lattice points sharing one dimension.
class PointSet {
public:
    PointSet() : dim_(0) {}
    explicit PointSet(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    }
    PointSet(int dim, std::vector<Point> points) : PointSet(dim) {
        for (auto& p : points) insert(std::move(p));
    }

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Point& p) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), p, lex_less);
        return it != points_.end() && *it == p;
    }

    // Returns false when the point was already present.
    bool insert(Point p) {
        if (static_cast<int>(p.size()) != dim_)
            throw std::invalid_argument("dimension mismatch in point set");
        auto it = std::lower_bound(points_.begin(), points_.end(), p, lex_less);
        if (it != points_.end() && *it == p) return false;
        points_.insert(it, std::move(p));
        return true;
    }

    // Returns false when the point was absent.
    bool erase(const Point& p) {
        auto it = std::lower_bound(points_.begin(), points_.end(), p, lex_less);
        if (it == points_.end() || *it != p) return false;
        points_.erase(it);
        return true;
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.dim_ == b.dim_ && a.points_ == b.points_;
    }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    int dim_;
    std::vector<Point> points_;  // kept lexicographically sorted
};

inline mpz_class dot(const Point& a, const Point& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline mpq_class dot_q(const QPoint& a, const QPoint& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// 2D cross product of (b-a) x (c-a).
inline mpz_class cross2(const Point& a, const Point& b, const Point& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

inline mpq_class cross2_q(const QPoint& a, const QPoint& b, const QPoint& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace latgeo
