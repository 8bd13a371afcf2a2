#include "latgeo/hull.hpp"

#include <algorithm>
#include <map>

#include "latgeo/lp.hpp"

namespace latgeo {

namespace {

template <typename P, typename Cross>
std::vector<P> monotone_chain(std::vector<P> pts, Cross cross) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<P> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 2) {  // all points collinear: keep the two endpoints
        return {pts.front(), pts.back()};
    }
    return hull;
}

}  // namespace

std::vector<Point> hull2d(std::vector<Point> pts) {
    return monotone_chain(std::move(pts), [](const Point& a, const Point& b, const Point& c) {
        return sgn(cross2(a, b, c));
    });
}

std::vector<QPoint> hull2d_q(std::vector<QPoint> pts) {
    return monotone_chain(std::move(pts), [](const QPoint& a, const QPoint& b, const QPoint& c) {
        return sgn(cross2_q(a, b, c));
    });
}

bool in_convex_hull(const QPoint& q, const std::vector<QPoint>& hull_points) {
    if (hull_points.empty()) return false;
    const int n = static_cast<int>(q.size());
    const int m = static_cast<int>(hull_points.size());
    lp::Problem prob;
    prob.nvars = m;
    prob.objective.assign(m, 0);
    prob.nonneg.assign(m, true);
    for (int c = 0; c < n; ++c) {
        std::vector<mpq_class> row(m);
        for (int j = 0; j < m; ++j) row[j] = hull_points[j][c];
        prob.add_row(std::move(row), q[c], lp::RowType::EQ);
    }
    prob.add_row(std::vector<mpq_class>(m, 1), 1, lp::RowType::EQ);
    return lp::solve(prob).status == lp::Status::Optimal;
}

bool in_convex_hull(const Point& q, const PointSet& s) {
    std::vector<QPoint> pts;
    pts.reserve(s.size());
    for (const auto& p : s) pts.push_back(to_rational(p));
    return in_convex_hull(to_rational(q), pts);
}

bool is_extreme_point(std::size_t index, const std::vector<QPoint>& pts) {
    std::vector<QPoint> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != index) others.push_back(pts[j]);
    return !in_convex_hull(pts[index], others);
}

std::vector<Point> extreme_points(const PointSet& s) {
    if (s.dim() == 2) {
        auto hull = hull2d(s.points());
        std::sort(hull.begin(), hull.end(), lex_less);
        return hull;
    }
    std::vector<QPoint> pts;
    pts.reserve(s.size());
    for (const auto& p : s) pts.push_back(to_rational(p));
    std::vector<Point> result;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (is_extreme_point(i, pts)) result.push_back(s[i]);
    return result;  // point set order is already lexicographic
}

namespace {

// Primitive integer normal of the hyperplane through n affinely independent
// lattice points, or empty when the points are affinely dependent.
// Computed as the generalized cross product via cofactor expansion.
Point hyperplane_normal(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts[0].size());
    // Rows: pts[i] - pts[0], i = 1..n-1  (an (n-1) x n matrix)
    std::vector<Point> rows;
    for (int i = 1; i < n; ++i) rows.push_back(sub(pts[i], pts[0]));
    Point normal(n);
    // normal[j] = (-1)^j * minor obtained by deleting column j.
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<mpz_class>> minor;
        for (const auto& r : rows) {
            std::vector<mpz_class> mr;
            for (int c = 0; c < n; ++c)
                if (c != j) mr.push_back(r[c]);
            minor.push_back(std::move(mr));
        }
        // Determinant by fraction-free Gaussian elimination (Bareiss).
        const int d = n - 1;
        mpz_class det = 1, prev = 1;
        bool zero = false;
        for (int col = 0; col < d && !zero; ++col) {
            int piv = -1;
            for (int r = col; r < d; ++r)
                if (minor[r][col] != 0) { piv = r; break; }
            if (piv < 0) { zero = true; break; }
            if (piv != col) { std::swap(minor[piv], minor[col]); det = -det; }
            for (int r = col + 1; r < d; ++r)
                for (int c = col + 1; c < d; ++c)
                    minor[r][c] = (minor[col][col] * minor[r][c] - minor[r][col] * minor[col][c]) / prev;
            prev = minor[col][col];
        }
        det = zero ? mpz_class(0) : mpz_class(det * minor[d - 1][d - 1]);
        normal[j] = (j % 2 == 0) ? det : -det;
    }
    bool all_zero = true;
    mpz_class g = 0;
    for (const auto& c : normal) {
        if (c != 0) all_zero = false;
        mpz_class a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    if (all_zero) return {};
    for (auto& c : normal) c /= g;
    return normal;
}

}  // namespace

std::vector<HalfSpace> hull_facets(const PointSet& s) {
    const int n = s.dim();
    if (n > 4) throw std::invalid_argument("facet enumeration supported for n <= 4 only");
    auto verts = extreme_points(s);
    const std::size_t m = verts.size();
    if (m < static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("facet enumeration requires a full-dimensional hull");
    std::map<std::pair<Point, mpz_class>, bool> seen;
    std::vector<HalfSpace> facets;
    std::vector<std::size_t> idx(n);
    // All n-subsets of vertices.
    std::vector<std::size_t> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    while (true) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) pts.push_back(verts[comb[i]]);
        Point normal = hyperplane_normal(pts);
        if (!normal.empty()) {
            mpz_class offset = dot(normal, pts[0]);
            bool below = false, above = false;
            for (const auto& v : verts) {
                int c = sgn(mpz_class(dot(normal, v) - offset));
                if (c > 0) above = true;
                if (c < 0) below = true;
                if (above && below) break;
            }
            if (!(above && below)) {
                Point oriented = normal;
                mpz_class b = offset;
                if (above) {  // flip so all points satisfy <=
                    for (auto& c : oriented) c = -c;
                    b = -b;
                }
                auto key = std::make_pair(oriented, b);
                if (!seen.count(key)) {
                    seen[key] = true;
                    QPoint qn;
                    for (const auto& c : oriented) qn.emplace_back(c);
                    facets.push_back({std::move(qn), mpq_class(b)});
                }
            }
        }
        // next combination
        int i = n - 1;
        while (i >= 0 && comb[i] == m - n + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
    }
    return facets;
}

std::vector<std::pair<std::size_t, std::size_t>> hull_edges(const std::vector<Point>& vertices) {
    const std::size_t m = vertices.size();
    if (m < 2) return {};
    const int n = static_cast<int>(vertices[0].size());
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    // Variables: c (n, free), d (free), t (free). Maximize t subject to
    //   c.p - d = 0, c.q - d = 0, c.x - d + t <= 0 for other vertices,
    //   -1 <= c_j <= 1.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            lp::Problem prob;
            prob.nvars = n + 2;
            prob.objective.assign(n + 2, 0);
            prob.objective[n + 1] = 1;
            prob.nonneg.assign(n + 2, false);
            auto row_for = [&](const Point& p) {
                std::vector<mpq_class> row(n + 2, 0);
                for (int c = 0; c < n; ++c) row[c] = mpq_class(p[c]);
                row[n] = -1;
                return row;
            };
            prob.add_row(row_for(vertices[i]), 0, lp::RowType::EQ);
            prob.add_row(row_for(vertices[j]), 0, lp::RowType::EQ);
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i || k == j) continue;
                auto row = row_for(vertices[k]);
                row[n + 1] = 1;
                prob.add_row(std::move(row), 0, lp::RowType::LE);
            }
            for (int c = 0; c < n; ++c) {
                std::vector<mpq_class> up(n + 2, 0), dn(n + 2, 0);
                up[c] = 1;
                dn[c] = -1;
                prob.add_row(std::move(up), 1, lp::RowType::LE);
                prob.add_row(std::move(dn), 1, lp::RowType::LE);
            }
            auto res = lp::solve(prob);
            if (res.status == lp::Status::Optimal && res.value > 0) edges.emplace_back(i, j);
        }
    }
    return edges;
}

mpz_class shoelace_twice(const std::vector<Point>& polygon) {
    mpz_class s = 0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = polygon[i];
        const auto& b = polygon[(i + 1) % n];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return s;
}

mpz_class segment_lattice_count(const Point& a, const Point& b) {
    mpz_class g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class d = abs(b[i] - a[i]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
    return g + 1;
}

PolygonStats pick_stats(const std::vector<Point>& polygon) {
    if (polygon.empty()) throw std::invalid_argument("empty polygon");
    PolygonStats st;
    st.vertex_count = static_cast<long>(polygon.size());
    mpz_class twice = shoelace_twice(polygon);
    if (twice < 0) throw std::invalid_argument("polygon must be positively oriented");
    st.area = make_q(twice, 2);
    if (twice == 0) {
        st.degenerate = true;
        return st;
    }
    mpz_class boundary = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i)
        boundary += segment_lattice_count(polygon[i], polygon[(i + 1) % polygon.size()]) - 1;
    st.boundary_nonvertex = mpz_class(boundary - st.vertex_count).get_si();

    // Direct interior count by bounding-box scan with exact side tests.
    Point lo = polygon[0], hi = polygon[0];
    for (const auto& p : polygon) {
        lo[0] = std::min(lo[0], p[0]);
        lo[1] = std::min(lo[1], p[1]);
        hi[0] = std::max(hi[0], p[0]);
        hi[1] = std::max(hi[1], p[1]);
    }
    long interior = 0;
    for (mpz_class x = lo[0]; x <= hi[0]; ++x) {
        for (mpz_class y = lo[1]; y <= hi[1]; ++y) {
            Point q{x, y};
            bool strict = true;
            for (std::size_t i = 0; i < polygon.size() && strict; ++i) {
                if (cross2(polygon[i], polygon[(i + 1) % polygon.size()], q) <= 0) strict = false;
            }
            if (strict) ++interior;
        }
    }
    st.interior_count = interior;
    return st;
}

}  // namespace latgeo
