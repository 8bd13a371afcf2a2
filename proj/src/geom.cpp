#include "latgeo/geom.hpp"

#include <stdexcept>

#include "latgeo/lp.hpp"

namespace latgeo {

namespace {

lp::Problem base_problem(const HRep& hrep) {
    lp::Problem prob;
    prob.nvars = hrep.dim;
    prob.objective.assign(hrep.dim, 0);
    prob.nonneg.assign(hrep.dim, false);
    for (const auto& r : hrep.rows) {
        std::vector<mpq_class> row(r.normal.begin(), r.normal.end());
        prob.add_row(std::move(row), r.offset, lp::RowType::LE);
    }
    return prob;
}

}  // namespace

bool is_bounded(const HRep& hrep) {
    // Recession cone clipped to the unit box; the cone is nontrivial iff
    // some coordinate can move off zero.
    for (int j = 0; j < hrep.dim; ++j) {
        for (int dir = 0; dir < 2; ++dir) {
            lp::Problem prob;
            prob.nvars = hrep.dim;
            prob.objective.assign(hrep.dim, 0);
            prob.objective[j] = dir == 0 ? 1 : -1;
            prob.nonneg.assign(hrep.dim, false);
            for (const auto& r : hrep.rows) {
                std::vector<mpq_class> row(r.normal.begin(), r.normal.end());
                prob.add_row(std::move(row), 0, lp::RowType::LE);
            }
            for (int c = 0; c < hrep.dim; ++c) {
                std::vector<mpq_class> up(hrep.dim, 0), dn(hrep.dim, 0);
                up[c] = 1;
                dn[c] = -1;
                prob.add_row(std::move(up), 1, lp::RowType::LE);
                prob.add_row(std::move(dn), 1, lp::RowType::LE);
            }
            auto res = lp::solve(prob);
            if (res.status != lp::Status::Optimal) return false;
            if (res.value > 0) return false;
        }
    }
    return true;
}

std::optional<std::pair<QPoint, QPoint>> rational_bounds(const HRep& hrep) {
    QPoint lo(hrep.dim), hi(hrep.dim);
    for (int j = 0; j < hrep.dim; ++j) {
        for (int dir = 0; dir < 2; ++dir) {
            auto prob = base_problem(hrep);
            prob.objective[j] = dir == 0 ? 1 : -1;
            auto res = lp::solve(prob);
            if (res.status == lp::Status::Infeasible) return std::nullopt;
            if (res.status == lp::Status::Unbounded)
                throw std::domain_error("polyhedron is unbounded");
            if (dir == 0)
                hi[j] = res.value;
            else
                lo[j] = -res.value;
        }
    }
    return std::make_pair(lo, hi);
}

std::optional<Box> integer_bounding_box(const HRep& hrep) {
    auto bounds = rational_bounds(hrep);
    if (!bounds) return std::nullopt;
    Box box;
    box.lo.resize(hrep.dim);
    box.hi.resize(hrep.dim);
    for (int j = 0; j < hrep.dim; ++j) {
        box.lo[j] = ceil_q(bounds->first[j]);
        box.hi[j] = floor_q(bounds->second[j]);
    }
    return box;
}

PointSet enumerate_lattice_points(const HRep& hrep, const std::optional<Box>& box) {
    std::optional<Box> region = box;
    if (!region) {
        if (!is_bounded(hrep)) throw std::domain_error("unbounded enumeration");
        region = integer_bounding_box(hrep);
        if (!region) return PointSet(hrep.dim);
    } else {
        // Clip the supplied box to the polyhedron's own bounds when finite.
        if (is_bounded(hrep)) {
            if (auto own = integer_bounding_box(hrep)) {
                for (int j = 0; j < hrep.dim; ++j) {
                    region->lo[j] = std::max(region->lo[j], own->lo[j]);
                    region->hi[j] = std::min(region->hi[j], own->hi[j]);
                }
            } else {
                return PointSet(hrep.dim);
            }
        }
    }
    PointSet out(hrep.dim);
    for_each_lattice_point(*region, [&](const Point& x) {
        if (hrep.contains(x)) out.insert(x);
    });
    return out;
}

Box bounding_box(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("bounding box of empty set");
    Box box{s[0], s[0]};
    for (const auto& p : s) {
        for (int j = 0; j < s.dim(); ++j) {
            box.lo[j] = std::min(box.lo[j], p[j]);
            box.hi[j] = std::max(box.hi[j], p[j]);
        }
    }
    return box;
}

IntegerHull integer_hull(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("integer hull of empty set");
    IntegerHull result{PointSet(s.dim()), PointSet(s.dim())};
    for (auto& v : extreme_points(s)) result.vertices.insert(v);

    Box box = bounding_box(s);
    if (s.dim() == 2) {
        // Fast path: polygon membership with exact orientation tests.
        auto hull = hull2d(s.points());
        for_each_lattice_point(box, [&](const Point& x) {
            if (hull.size() == 1) {
                if (x == hull[0]) result.all_points.insert(x);
                return;
            }
            if (hull.size() == 2) {
                if (cross2(hull[0], hull[1], x) == 0 &&
                    std::min(hull[0][0], hull[1][0]) <= x[0] && x[0] <= std::max(hull[0][0], hull[1][0]) &&
                    std::min(hull[0][1], hull[1][1]) <= x[1] && x[1] <= std::max(hull[0][1], hull[1][1]))
                    result.all_points.insert(x);
                return;
            }
            for (std::size_t i = 0; i < hull.size(); ++i)
                if (cross2(hull[i], hull[(i + 1) % hull.size()], x) < 0) return;
            result.all_points.insert(x);
        });
        return result;
    }

    // General dimension: cheap directional cuts first, LP membership last.
    std::vector<QPoint> verts;
    for (const auto& v : result.vertices) verts.push_back(to_rational(v));
    std::vector<Point> directions;
    const int n = s.dim();
    {
        Point d(n, 0);
        for (int j = 0; j < n; ++j) {
            d[j] = 1;
            directions.push_back(d);
            d[j] = -1;
            directions.push_back(d);
            d[j] = 0;
        }
        // +-1 diagonal directions, capped to keep the prefilter small.
        long combos = 1;
        for (int j = 0; j < n && combos <= 64; ++j) combos *= 2;
        for (long mask = 0; mask < combos; ++mask) {
            Point dd(n);
            for (int j = 0; j < n; ++j) dd[j] = (mask >> j) & 1 ? 1 : -1;
            directions.push_back(dd);
        }
    }
    std::vector<mpz_class> support(directions.size());
    for (std::size_t k = 0; k < directions.size(); ++k) {
        bool first = true;
        for (const auto& v : result.vertices) {
            mpz_class val = dot(directions[k], v);
            if (first || val > support[k]) support[k] = val;
            first = false;
        }
    }
    for_each_lattice_point(box, [&](const Point& x) {
        for (std::size_t k = 0; k < directions.size(); ++k)
            if (dot(directions[k], x) > support[k]) return;
        if (in_convex_hull(to_rational(x), verts)) result.all_points.insert(x);
    });
    return result;
}

bool in_convex_position(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("empty set");
    if (s.dim() == 2) {
        auto hull = hull2d(s.points());
        return hull.size() == s.size();
    }
    std::vector<QPoint> pts;
    for (const auto& p : s) pts.push_back(to_rational(p));
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!is_extreme_point(i, pts)) return false;
    return true;
}

}  // namespace latgeo
