#include "latgeo/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "latgeo/bounds.hpp"
#include "latgeo/geom.hpp"
#include "latgeo/hull.hpp"
#include "latgeo/sumsets.hpp"

namespace latgeo {

namespace {

// The planar walk engine works in machine integers: every certified region
// used here fits in a few hundred in each coordinate.
struct P64 {
    long x = 0, y = 0;
};

long long cross64(P64 a, P64 b) {
    return static_cast<long long>(a.x) * b.y - static_cast<long long>(a.y) * b.x;
}

int sector(P64 e) { return (e.x > 0 || (e.x == 0 && e.y > 0)) ? 0 : 1; }

long gcd_abs(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

struct WalkCaps {
    long vcap = 0;        // max vertex count
    long tacap = 0;       // max twice-area
    long bcap = 0;        // max boundary non-vertex count
    long wcap = 0;        // |y| cap
    long xcap = 0;        // x cap
};

struct WalkPoly {
    const std::vector<P64>& verts;  // counterclockwise, verts[0] = origin
    long bnv = 0;                   // boundary lattice points that are not vertices
    long twice_area = 0;
};

// Enumerates every convex lattice polygon (>= 3 vertices), anchored at its
// lexicographically least vertex at the origin, whose vertices satisfy
// 0 <= x <= xcap, |y| <= wcap, with at most vcap vertices, twice-area at
// most tacap and at most bcap boundary non-vertex points. Edges are walked
// in strictly increasing angle over the window anchored at the least
// vertex, so each polygon appears exactly once.
class Walker {
public:
    Walker(const WalkCaps& caps, const std::function<void(const WalkPoly&)>& visit)
        : caps_(caps), visit_(visit) {
        for (long dx = -caps.xcap; dx <= caps.xcap; ++dx)
            for (long dy = -2 * caps.wcap; dy <= 2 * caps.wcap; ++dy) {
                if (dx == 0 && dy == 0) continue;
                if (gcd_abs(dx, dy) - 1 > caps.bcap) continue;
                dirs_.push_back({dx, dy});
            }
        std::sort(dirs_.begin(), dirs_.end(), [](P64 a, P64 b) {
            if (sector(a) != sector(b)) return sector(a) < sector(b);
            long long c = cross64(a, b);
            if (c != 0) return c > 0;
            // Same direction: shorter edge first (deterministic tie order).
            return std::abs(a.x) + std::abs(a.y) < std::abs(b.x) + std::abs(b.y);
        });
    }

    std::size_t task_count() const { return dirs_.size(); }

    // Runs the subtree rooted at first edge dirs_[first]; returns nodes visited.
    std::uint64_t run_task(std::size_t first) {
        nodes_ = 0;
        P64 e = dirs_[first];
        if (sector(e) != 0) return 0;  // first edge must leave the least vertex forward
        P64 q{e.x, e.y};
        if (!in_bounds(q)) return 0;
        long bnv = gcd_abs(e.x, e.y) - 1;
        verts_.assign(1, P64{0, 0});
        verts_.push_back(q);
        dfs(first, first, q, 0, bnv);
        return nodes_;
    }

private:
    bool in_bounds(P64 q) const {
        if (q.x < 0 || q.x > caps_.xcap || q.y < -caps_.wcap || q.y > caps_.wcap) return false;
        return q.x > 0 || q.y > 0;  // strictly lex-greater than the anchor
    }

    void dfs(std::size_t first, std::size_t last, P64 pos, long twice_area, long bnv) {
        ++nodes_;
        for (std::size_t j = last + 1; j < dirs_.size(); ++j) {
            P64 e = dirs_[j];
            if (cross64(dirs_[last], e) <= 0) continue;
            long g = gcd_abs(e.x, e.y) - 1;
            if (bnv + g > caps_.bcap) continue;
            P64 q{pos.x + e.x, pos.y + e.y};
            if (q.x == 0 && q.y == 0) {
                if (verts_.size() >= 3 && cross64(e, dirs_[first]) > 0)
                    visit_(WalkPoly{verts_, bnv + g, twice_area});
                continue;
            }
            if (!in_bounds(q)) continue;
            if (static_cast<long>(verts_.size()) + 1 > caps_.vcap) continue;
            long long fan = cross64(pos, q);
            if (fan < 0 || twice_area + fan > caps_.tacap) continue;
            verts_.push_back(q);
            dfs(first, j, q, twice_area + static_cast<long>(fan), bnv + g);
            verts_.pop_back();
        }
    }

    WalkCaps caps_;
    std::function<void(const WalkPoly&)> visit_;
    std::vector<P64> dirs_;
    std::vector<P64> verts_;
    std::uint64_t nodes_ = 0;
};

std::vector<Point> to_points(const std::vector<P64>& verts) {
    std::vector<Point> out;
    out.reserve(verts.size());
    for (const auto& p : verts) out.push_back(Point{mpz_class(p.x), mpz_class(p.y)});
    return out;
}

// Non-vertex lattice points of the hull: k = A + B/2 + 1 - v by Pick.
long nonvertex_count(const WalkPoly& poly) {
    long v = static_cast<long>(poly.verts.size());
    long boundary = v + poly.bnv;
    return (poly.twice_area + boundary) / 2 + 1 - v;
}

WalkCaps alpha_caps(long k) {
    WalkCaps caps;
    caps.vcap = std::min({averkov_linear(2, k), aliev_linear(2, k), c2_upper(k)}).get_si();
    caps.tacap = 2 * k + caps.vcap - 2;  // Pick: 2A <= 2k + v - 2
    caps.bcap = k;
    caps.wcap = isqrt(2 * mpz_class(caps.tacap)).get_si();  // A >= w^2/4
    caps.xcap = 2 * caps.tacap;                             // X <= 4A/w <= 4A
    return caps;
}

struct BestWitness {
    long value = -1;
    std::string id;
    std::vector<Point> vertices;

    // Larger polygons win; ties resolve to the canonically least id.
    void offer(const std::vector<P64>& verts) {
        long v = static_cast<long>(verts.size());
        if (v < value) return;
        CanonicalPolygon canon = canonicalize(to_points(verts));
        if (v > value || canon.id < id) {
            value = v;
            id = std::move(canon.id);
            vertices = std::move(canon.vertices);
        }
    }

    void merge(const BestWitness& other) {
        if (other.value > value || (other.value == value && !other.id.empty() &&
                                    (id.empty() || other.id < id)))
            *this = other;
    }
};

}  // namespace

AlphaResult alpha_search(long k, int threads) {
    if (k < 0) throw std::invalid_argument("alpha_search: k must be >= 0");
    if (threads < 1) threads = 1;
    WalkCaps caps = alpha_caps(k);
    AlphaResult res;
    res.certificate.vertex_cap = caps.vcap;
    res.certificate.twice_area_cap = caps.tacap;
    res.certificate.width_cap = caps.wcap;
    res.certificate.extent_cap = caps.xcap;

    // Each worker owns a walker; tasks are whole first-edge subtrees handed
    // out round-robin, so the merged outcome is schedule-independent.
    std::vector<BestWitness> bests(threads);
    std::vector<std::uint64_t> nodes(threads, 0);
    auto work = [&](int t) {
        BestWitness& best = bests[t];
        Walker walker(caps, [&](const WalkPoly& poly) {
            if (nonvertex_count(poly) == k) best.offer(poly.verts);
        });
        for (std::size_t task = t; task < walker.task_count(); task += threads)
            nodes[t] += walker.run_task(task);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    BestWitness best;
    for (const auto& b : bests) best.merge(b);
    for (auto n : nodes) res.certificate.nodes_visited += n;

    if (best.value < 0) {
        // No polygon attains exactly k non-vertex points; the segment
        // {0, k+1} on a line always does, with two vertices.
        res.value = 2;
        res.witness = PointSet(2);
        res.witness.insert(Point{0, 0});
        res.witness.insert(Point{mpz_class(k + 1), 0});
    } else {
        res.value = best.value;
        res.witness = PointSet(2);
        for (const auto& p : best.vertices) res.witness.insert(p);
    }
    res.certificate.exhaustive = true;
    return res;
}

EllResult ell_search(long k, int threads) {
    if (k < 1) throw std::invalid_argument("ell_search: k must be >= 1");
    EllResult res;
    res.certificate.exhaustive = true;
    long best = -1;
    for (long i = 0; i < k; ++i) {
        AlphaResult a = alpha_search(i, threads);
        res.certificate.nodes_visited += a.certificate.nodes_visited;
        res.certificate.exhaustive = res.certificate.exhaustive && a.certificate.exhaustive;
        res.certificate.vertex_cap = std::max(res.certificate.vertex_cap, a.certificate.vertex_cap);
        res.certificate.twice_area_cap =
            std::max(res.certificate.twice_area_cap, a.certificate.twice_area_cap);
        res.certificate.width_cap = std::max(res.certificate.width_cap, a.certificate.width_cap);
        res.certificate.extent_cap = std::max(res.certificate.extent_cap, a.certificate.extent_cap);
        if (a.value > best) {
            best = a.value;
            res.witness = a.witness;
        }
    }
    res.value = 1 + best;
    return res;
}

MuResult mu_c_search(int n, long s, const Box& grid) {
    if (s < 2) throw std::invalid_argument("mu_c_search: s must be >= 2");
    if (static_cast<int>(grid.lo.size()) != n)
        throw std::invalid_argument("mu_c_search: grid dimension mismatch");
    std::vector<Point> cells;
    for_each_lattice_point(grid, [&](const Point& p) { cells.push_back(p); });

    MuResult res;
    res.certificate.canonicalization = "none";
    res.lower_bound = (n == 2) ? (s == 2 ? 1 : 2 * s - 3) : s - 1;
    res.value = -1;

    PointSet cur(n);
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        ++nodes;
        if (static_cast<long>(cur.size()) == s) {
            long m = static_cast<long>(midpoint_set(cur).points.size());
            if (res.value < 0 || m < res.value) {
                res.value = m;
                res.witness = cur;
            }
            return;
        }
        for (std::size_t i = start; i < cells.size(); ++i) {
            if (cells.size() - i < static_cast<std::size_t>(s) - cur.size()) break;
            cur.insert(cells[i]);
            // Subsets of convex-position sets stay in convex position, so
            // pruning here loses no s-subsets.
            if (cur.size() < 3 || in_convex_position(cur)) self(self, i + 1);
            cur.erase(cells[i]);
        }
    };
    rec(rec, 0);
    res.certificate.nodes_visited = nodes;
    res.certificate.exhaustive = true;  // exhaustive over the grid, a mu_c upper bound
    if (res.value < 0) throw std::domain_error("mu_c_search: grid holds no convex-position s-set");
    return res;
}

long s_nk(int n, long k) {
    if (k < 1) throw std::invalid_argument("s_nk: k must be >= 1");
    if (n == 2) {
        if (k <= 1) return 2;
        long s = 3;
        while (2 * s - 3 < k) ++s;
        return s;
    }
    return k + 1;
}

BracketResult c2_bracket(long k, int threads) {
    if (k < 0) throw std::invalid_argument("c2_bracket: k must be >= 0");
    BracketResult res;
    res.k = k;

    AlphaResult alpha = alpha_search(k, threads);
    res.exhaustive = alpha.certificate.exhaustive;
    res.lower = alpha.value;
    res.lower_source = "alpha-search";
    // Deficit chain from the exact small-k values c(2,0)=4, c(2,1)=c(2,2)=6.
    mpz_class chained = k == 0 ? 4 : (k == 1 ? 6 : mpz_class(8 - k));
    if (chained > res.lower) {
        res.lower = chained;
        res.lower_source = "chained-deficit";
    }

    EllResult ell = ell_search(k + 1, threads);
    res.upper = ell.value - 1;
    res.upper_source = "ell-search";
    struct Named {
        const char* name;
        mpz_class value;
    };
    for (const auto& cand : {Named{"averkov-linear", averkov_linear(2, k)},
                             Named{"aliev-linear", aliev_linear(2, k)},
                             Named{"c2-cube-root", c2_upper(k)}}) {
        if (cand.value < res.upper) {
            res.upper = cand.value;
            res.upper_source = cand.name;
        }
    }
    if (k == 5) {
        res.cited_upper = 7;
        res.cited_source = "cited-literature";
    }
    if (res.upper < res.lower) throw std::logic_error("c2_bracket: bracket inverted");
    return res;
}

std::vector<CanonicalPolygon> enumerate_convex_configs(long vertex_budget, long twice_area_cap) {
    if (vertex_budget < 3) throw std::invalid_argument("enumerate_convex_configs: budget < 3");
    WalkCaps caps;
    caps.vcap = vertex_budget;
    caps.tacap = twice_area_cap;
    caps.bcap = twice_area_cap + 2;  // B <= 2A + 2, so b_nv cannot exceed this
    caps.wcap = isqrt(2 * mpz_class(caps.tacap)).get_si();
    caps.xcap = 2 * caps.tacap;
    std::map<std::string, CanonicalPolygon> classes;
    Walker walker(caps, [&](const WalkPoly& poly) {
        CanonicalPolygon canon = canonicalize(to_points(poly.verts));
        classes.emplace(canon.id, std::move(canon));
    });
    for (std::size_t t = 0; t < walker.task_count(); ++t) walker.run_task(t);
    std::vector<CanonicalPolygon> out;
    out.reserve(classes.size());
    for (auto& [id, poly] : classes) out.push_back(std::move(poly));
    std::stable_sort(out.begin(), out.end(), [](const CanonicalPolygon& a, const CanonicalPolygon& b) {
        return a.vertices.size() < b.vertices.size();
    });
    return out;
}

long alpha_bruteforce(long k, const Box& grid) {
    if (grid.lo.size() != 2) throw std::invalid_argument("alpha_bruteforce: planar grids only");
    std::vector<Point> cells;
    for_each_lattice_point(grid, [&](const Point& p) { cells.push_back(p); });
    long best = 0;
    PointSet cur(2);
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() >= 1) {
            IntegerHull hull = integer_hull(cur);
            long gap = static_cast<long>(hull.all_points.size() - cur.size());
            if (gap == k) best = std::max(best, static_cast<long>(cur.size()));
        }
        for (std::size_t i = start; i < cells.size(); ++i) {
            cur.insert(cells[i]);
            if (cur.size() < 3 || in_convex_position(cur)) self(self, i + 1);
            cur.erase(cells[i]);
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace latgeo
