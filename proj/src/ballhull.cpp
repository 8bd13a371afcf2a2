#include "latgeo/ballhull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "latgeo/hull.hpp"
#include "latgeo/numeric.hpp"
#include "latgeo/sumsets.hpp"

namespace latgeo {

namespace {

mpq_class norm_sq(const QPoint& p) {
    mpq_class s = 0;
    for (const auto& c : p) s += c * c;
    return s;
}

// max integer y with y <= c + sqrt(q); q >= 0.
mpz_class floor_center_plus_sqrt(const mpq_class& c, const mpq_class& q) {
    mpz_class y = floor_q(c) + isqrt(ceil_q(q)) + 2;
    auto ok = [&](const mpz_class& cand) {
        mpq_class d = mpq_class(cand) - c;
        if (d <= 0) return true;
        return d * d <= q;
    };
    while (!ok(y)) --y;
    return y;
}

mpz_class ceil_center_minus_sqrt(const mpq_class& c, const mpq_class& q) {
    return -floor_center_plus_sqrt(mpq_class(-c), q);
}

struct Facet {
    QPoint normal;    // outward
    mpq_class offset;  // normal . x <= offset on the hull
};

struct HullData {
    mpz_class n_count;
    std::vector<Point> vertices;
    std::vector<Facet> facets;
    mpq_class max_edge_sq;
};

mpq_class edge_len_sq(const Point& a, const Point& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class d = a[i] - b[i];
        s += mpq_class(d * d);
    }
    return s;
}

HullData compute_hull(const BallSpec& spec) {
    HullData out;
    out.n_count = 0;
    out.max_edge_sq = 0;
    if (spec.dim == 2) {
        // Column scan: exact per-column y range, hull from column extremes.
        const mpq_class& cx = spec.center[0];
        const mpq_class& cy = spec.center[1];
        mpq_class r2 = spec.radius * spec.radius;
        std::vector<Point> candidates;
        mpz_class xlo = ceil_q(cx - spec.radius), xhi = floor_q(cx + spec.radius);
        for (mpz_class x = xlo; x <= xhi; ++x) {
            mpq_class dx = mpq_class(x) - cx;
            mpq_class q2 = r2 - dx * dx;
            if (q2 < 0) continue;
            mpz_class ymax = floor_center_plus_sqrt(cy, q2);
            mpz_class ymin = ceil_center_minus_sqrt(cy, q2);
            if (ymin > ymax) continue;
            out.n_count += ymax - ymin + 1;
            candidates.push_back(Point{x, ymin});
            if (ymin != ymax) candidates.push_back(Point{x, ymax});
        }
        out.vertices = hull2d(std::move(candidates));
        const std::size_t v = out.vertices.size();
        if (v >= 2) {
            for (std::size_t i = 0; i < v && !(v == 2 && i == 1); ++i) {
                const Point& p = out.vertices[i];
                const Point& q = out.vertices[(i + 1) % v];
                out.max_edge_sq = std::max(out.max_edge_sq, edge_len_sq(p, q));
                if (v >= 3) {
                    // Outward normal of the counterclockwise edge p -> q.
                    QPoint normal{mpq_class(q[1] - p[1]), mpq_class(p[0] - q[0])};
                    mpq_class offset = normal[0] * p[0] + normal[1] * p[1];
                    out.facets.push_back({std::move(normal), std::move(offset)});
                }
            }
        }
        return out;
    }
    PointSet pts = ball_lattice_points(spec);
    if (pts.empty()) throw std::domain_error("ball_hull_stats: empty ball");
    out.n_count = static_cast<unsigned long>(pts.size());
    out.vertices = extreme_points(pts);
    for (const auto& [i, j] : hull_edges(out.vertices))
        out.max_edge_sq = std::max(out.max_edge_sq, edge_len_sq(out.vertices[i], out.vertices[j]));
    if (out.vertices.size() > static_cast<std::size_t>(spec.dim))
        for (const auto& hs : hull_facets(pts)) out.facets.push_back({hs.normal, hs.offset});
    return out;
}

// Certified lower bound on (r - sqrt(n))^2, clamped at zero: r^2 + n minus
// an over-approximation of 2 r sqrt(n).
mpq_class inner_radius_sq_lower(const mpq_class& r, int n) {
    if (r * r <= n) return 0;
    mpz_class scale = pow_z(10, 6);
    mpq_class sqrt_n_hi = make_q(isqrt(n * scale * scale) + 1, scale);
    mpq_class lower = r * r + n - 2 * r * sqrt_n_hi;
    return lower < 0 ? mpq_class(0) : lower;
}

mpq_class facet_dist_sq(const Facet& f, const QPoint& center) {
    mpq_class slack = f.offset - dot_q(f.normal, center);
    return slack * slack / norm_sq(f.normal);
}

void require_r_above_sqrt_n(const BallSpec& spec, const char* who) {
    if (spec.radius * spec.radius <= spec.dim)
        throw std::invalid_argument(std::string(who) + ": requires radius > sqrt(dim)");
}

// Entry radius of x along r -> B(ru, r) is (-a + sqrt(a^2 + q|x|^2)) / q
// with a = x.u and q = 1 - |u|^2 > 0.
struct EntryKey {
    mpq_class a;  // x . u
    mpq_class s;  // a^2 + q * |x|^2
};

EntryKey entry_key(const Point& x, const QPoint& u, const mpq_class& q) {
    EntryKey k;
    k.a = 0;
    mpq_class nsq = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        k.a += mpq_class(x[i]) * u[i];
        nsq += mpq_class(x[i] * x[i]);
    }
    k.s = k.a * k.a + q * nsq;
    return k;
}

// sign of rho(x) - rho(y)
int compare_entry(const EntryKey& x, const EntryKey& y) {
    return sign_plus_sqrt_minus_sqrt(mpq_class(y.a - x.a), x.s, y.s);
}

}  // namespace

BallSpec scaled_ball(int n, const QPoint& u, const mpq_class& r) {
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("scaled_ball: dimension mismatch");
    if (norm_sq(u) >= 1) throw std::invalid_argument("scaled_ball: requires ||u|| < 1");
    if (r <= 0) throw std::invalid_argument("scaled_ball: requires r > 0");
    BallSpec spec;
    spec.dim = n;
    spec.radius = r;
    spec.center.reserve(n);
    for (const auto& c : u) spec.center.push_back(r * c);
    return spec;
}

PointSet ball_lattice_points(const BallSpec& spec) {
    if (spec.radius <= 0) throw std::invalid_argument("ball_lattice_points: radius must be > 0");
    PointSet out(spec.dim);
    mpq_class r2 = spec.radius * spec.radius;
    Point x(spec.dim);
    auto rec = [&](auto&& self, int coord, const mpq_class& used) -> void {
        if (coord == spec.dim) {
            out.insert(x);
            return;
        }
        mpq_class budget = r2 - used;
        if (budget < 0) return;
        mpz_class lo = ceil_center_minus_sqrt(spec.center[coord], budget);
        mpz_class hi = floor_center_plus_sqrt(spec.center[coord], budget);
        for (mpz_class v = lo; v <= hi; ++v) {
            x[coord] = v;
            mpq_class d = mpq_class(v) - spec.center[coord];
            self(self, coord + 1, mpq_class(used + d * d));
        }
    };
    rec(rec, 0, mpq_class(0));
    return out;
}

BallHullStats ball_hull_stats(const BallSpec& spec) {
    HullData hull = compute_hull(spec);
    if (hull.n_count == 0) throw std::domain_error("ball_hull_stats: empty ball");
    BallHullStats st;
    st.n_count = hull.n_count;
    st.v_count = static_cast<long>(hull.vertices.size());
    st.k_count = st.n_count - st.v_count;
    st.max_edge_sq = hull.max_edge_sq;
    st.inner_margin = 0;
    if (!hull.facets.empty()) {
        mpq_class min_dist_sq = facet_dist_sq(hull.facets[0], spec.center);
        for (std::size_t i = 1; i < hull.facets.size(); ++i)
            min_dist_sq = std::min(min_dist_sq, facet_dist_sq(hull.facets[i], spec.center));
        st.inner_margin = min_dist_sq - inner_radius_sq_lower(spec.radius, spec.dim);
    }
    return st;
}

bool inner_ball_check(const BallSpec& spec) {
    require_r_above_sqrt_n(spec, "inner_ball_check");
    HullData hull = compute_hull(spec);
    for (const auto& f : hull.facets) {
        mpq_class slack = f.offset - dot_q(f.normal, spec.center);
        if (slack < 0) return false;  // center outside the hull
        // slack / |a| >= r - sqrt(n), both sides positive: compare squares.
        mpq_class nn = norm_sq(f.normal);
        mpq_class a = slack * slack - (spec.radius * spec.radius + spec.dim) * nn;
        mpq_class coef = 2 * spec.radius * nn;
        if (sign_plus_sqrt_minus_sqrt(a, mpq_class(coef * coef * spec.dim), mpq_class(0)) < 0)
            return false;
    }
    return true;
}

bool max_edge_check(const BallSpec& spec) {
    require_r_above_sqrt_n(spec, "max_edge_check");
    HullData hull = compute_hull(spec);
    // max_edge_sq <= 16 sqrt(n) r
    mpq_class bound_sq = mpq_class(16 * spec.radius) * (16 * spec.radius) * spec.dim;
    return sign_plus_sqrt_minus_sqrt(hull.max_edge_sq, mpq_class(0), bound_sq) <= 0;
}

QPoint generic_center(int n, std::uint64_t seed, unsigned precision_bits, long scan_count) {
    if (precision_bits < 64) throw std::invalid_argument("generic_center: need >= 64 bits");
    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        QPoint u;
        u.reserve(n);
        for (int i = 0; i < n; ++i) {
            mpq_class v = rng.unit_rational(precision_bits);  // in (0,1)
            u.push_back((2 * v - 1) / n);                     // |u_i| < 1/n
        }
        try {
            radius_sequence(u, scan_count);
            return u;
        } catch (const std::domain_error&) {
            continue;  // entry-radius tie: reseed
        }
    }
    throw std::runtime_error("generic_center: retry budget exhausted");
}

std::vector<Point> radius_sequence(const QPoint& u, long n_target) {
    const int n = static_cast<int>(u.size());
    if (n_target < 1) throw std::invalid_argument("radius_sequence: n_target must be >= 1");
    mpq_class q = 1 - norm_sq(u);
    if (q <= 0) throw std::invalid_argument("radius_sequence: requires ||u|| < 1");

    // Grow the scan radius until at least n_target points have entered.
    std::vector<Point> pts;
    for (mpq_class bound = 2;; bound *= 2) {
        pts.clear();
        Point x(n);
        auto rec = [&](auto&& self, int coord) -> void {
            if (coord == n) {
                // rho(x) <= bound  <=>  bound^2 q + 2 bound (x.u) - |x|^2 >= 0
                EntryKey k = entry_key(x, u, q);
                mpq_class nsq = (k.s - k.a * k.a) / q;
                if (bound * bound * q + 2 * bound * k.a - nsq >= 0) pts.push_back(x);
                return;
            }
            mpq_class c = bound * u[coord];
            mpz_class lo = ceil_q(c - bound), hi = floor_q(c + bound);
            for (mpz_class v = lo; v <= hi; ++v) {
                x[coord] = v;
                self(self, coord + 1);
            }
        };
        rec(rec, 0);
        if (static_cast<long>(pts.size()) >= n_target) break;
    }

    std::vector<EntryKey> keys;
    keys.reserve(pts.size());
    for (const auto& p : pts) keys.push_back(entry_key(p, u, q));
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        int c = compare_entry(keys[i], keys[j]);
        if (c != 0) return c < 0;
        return lex_less(pts[i], pts[j]);
    });
    std::vector<Point> out;
    out.reserve(n_target);
    for (long i = 0; i < n_target; ++i) {
        if (i + 1 < static_cast<long>(order.size()) &&
            compare_entry(keys[order[i]], keys[order[i + 1]]) == 0)
            throw std::domain_error("radius_sequence: entry radius tie");
        out.push_back(pts[order[i]]);
    }
    return out;
}

ExponentFit exponent_fit(int n, const std::vector<long>& radii, const QPoint& u) {
    if (radii.size() < 5) throw std::invalid_argument("exponent_fit: need >= 5 radii");
    std::vector<long> sorted = radii;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || sorted.back() < 10 * sorted.front())
        throw std::invalid_argument("exponent_fit: radii must span a decade");
    ExponentFit fit;
    fit.radii = sorted;
    fit.target = static_cast<double>(n) * (n - 1) / (n + 1);
    std::vector<double> xs, ys;
    for (long r : sorted) {
        BallHullStats st = ball_hull_stats(scaled_ball(n, u, r));
        fit.vertex_counts.push_back(st.v_count);
        xs.push_back(std::log(static_cast<double>(r)));
        ys.push_back(std::log(static_cast<double>(st.v_count)));
    }
    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = m * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("exponent_fit: degenerate abscissae");
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    double ssr = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ssr += e * e;
    }
    fit.residual = std::sqrt(ssr / m);
    return fit;
}

MuBallBound mu_upper_from_ball(int n, long s, const QPoint& u, long scan_cap) {
    if (s < 2) throw std::invalid_argument("mu_upper_from_ball: s must be >= 2");
    std::vector<Point> seq = radius_sequence(u, scan_cap);
    PointSet current(n);
    for (long i = 0; i < scan_cap; ++i) {
        current.insert(seq[i]);
        std::vector<Point> verts = n == 2 ? hull2d(current.points()) : extreme_points(current);
        PointSet vert_set(n, verts);
        ParityPartition classes = parity_partition(vert_set);
        const PointSet* largest = nullptr;
        for (const auto& [key, cls] : classes)
            if (!largest || cls.size() > largest->size()) largest = &cls;
        if (largest && static_cast<long>(largest->size()) == s) {
            MuBallBound out;
            out.s = s;
            out.parity_class = *largest;
            out.midpoints = static_cast<long>(midpoint_set(*largest).points.size());
            out.n_at_radius = i + 1;
            out.radius_index = i + 1;
            return out;
        }
    }
    throw std::domain_error("mu_upper_from_ball: scan cap reached before the class size matched");
}

}  // namespace latgeo
