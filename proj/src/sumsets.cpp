#include "latgeo/sumsets.hpp"

#include <algorithm>
#include <stdexcept>

#include "latgeo/hull.hpp"
#include "latgeo/numeric.hpp"

namespace latgeo {

MidpointSet midpoint_set(const PointSet& v) {
    if (v.size() < 1) throw std::invalid_argument("midpoint_set: empty input");
    MidpointSet out;
    out.source_size = v.size();
    const auto& pts = v.points();
    const int n = v.dim();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            QPoint mid(n);
            bool integral = true;
            Point mid_z(n);
            for (int c = 0; c < n; ++c) {
                mpz_class s = pts[i][c] + pts[j][c];
                mid[c] = make_q(s, 2);
                if (mpz_odd_p(s.get_mpz_t())) integral = false;
                else mid_z[c] = s / 2;
            }
            if (integral && v.contains(mid_z)) continue;
            out.points.insert(std::move(mid));
        }
    }
    return out;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    PointSet out(a.dim());
    for (const auto& p : a.points())
        for (const auto& q : b.points()) out.insert(add(p, q));
    return out;
}

PointSet k_fold_sum(const PointSet& a, int k, std::size_t size_guard) {
    if (k < 1) throw std::invalid_argument("k_fold_sum: k must be >= 1");
    PointSet acc = a;
    for (int i = 1; i < k; ++i) {
        if (acc.size() * a.size() > size_guard)
            throw std::length_error("k_fold_sum: size guard exceeded");
        acc = minkowski_sum(acc, a);
    }
    return acc;
}

PointSet difference_set(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("difference_set: dimension mismatch");
    PointSet out(a.dim());
    for (const auto& p : a.points())
        for (const auto& q : b.points()) out.insert(sub(p, q));
    return out;
}

ParityPartition parity_partition(const PointSet& v) {
    ParityPartition classes;
    for (const auto& p : v.points()) {
        std::vector<int> key(p.size());
        for (std::size_t c = 0; c < p.size(); ++c)
            key[c] = mpz_odd_p(p[c].get_mpz_t()) ? 1 : 0;
        auto it = classes.find(key);
        if (it == classes.end())
            it = classes.emplace(std::move(key), PointSet(v.dim())).first;
        it->second.insert(p);
    }
    return classes;
}

long triangulation_midpoint_bound(const PointSet& v) {
    if (v.dim() != 2) throw std::invalid_argument("triangulation_midpoint_bound: planar sets only");
    if (v.size() < 2) throw std::invalid_argument("triangulation_midpoint_bound: need >= 2 points");
    const auto& pts = v.points();
    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i)
        if (cross2(pts[0], pts[1], pts[i]) != 0) collinear = false;
    const long m = static_cast<long>(v.size());
    return collinear ? m - 1 : 2 * m - 3;
}

std::optional<std::array<mpz_class, 6>> find_avg5_solution(const PointSet& a) {
    if (a.dim() != 1) throw std::invalid_argument("find_avg5_solution: 1D sets only");
    if (a.size() < 6) return std::nullopt;
    std::vector<mpz_class> vals;
    vals.reserve(a.size());
    for (const auto& p : a.points()) vals.push_back(p[0]);
    std::sort(vals.begin(), vals.end());
    const std::size_t m = vals.size();
    // Choose the five summands as a sorted index prefix walk; for each
    // 5-subset test whether the required sixth element exists and is unused.
    std::array<std::size_t, 5> idx{};
    std::optional<std::array<mpz_class, 6>> found;
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start, const mpz_class& partial) -> bool {
        if (depth == 5) {
            mpz_class target = partial;
            if (target % 5 != 0) return false;
            mpz_class x6 = target / 5;
            if (!std::binary_search(vals.begin(), vals.end(), x6)) return false;
            for (std::size_t t = 0; t < 5; ++t)
                if (vals[idx[t]] == x6) return false;
            std::array<mpz_class, 6> w;
            for (std::size_t t = 0; t < 5; ++t) w[t] = vals[idx[t]];
            w[5] = x6;
            found = w;
            return true;
        }
        for (std::size_t i = start; i + (4 - depth) < m; ++i) {
            idx[depth] = i;
            if (self(self, depth + 1, i + 1, partial + vals[i])) return true;
        }
        return false;
    };
    rec(rec, 0, 0, mpz_class(0));
    return found;
}

PlunneckeCheck plunnecke_check(const PointSet& a, std::size_t size_guard) {
    if (a.size() == 0) throw std::invalid_argument("plunnecke_check: empty input");
    if (a.size() > size_guard) throw std::length_error("plunnecke_check: size guard exceeded");
    PointSet a5 = k_fold_sum(a, 5);
    PointSet diff = difference_set(a5, a5);
    PlunneckeCheck out;
    out.lhs = static_cast<unsigned long>(diff.size());
    PointSet a2 = minkowski_sum(a, a);
    mpq_class ratio = make_q(mpz_class(static_cast<unsigned long>(a2.size())),
                             mpz_class(static_cast<unsigned long>(a.size())));
    mpq_class pow = 1;
    for (int i = 0; i < 10; ++i) pow *= ratio;
    out.rhs = pow * mpz_class(static_cast<unsigned long>(a.size()));
    out.holds = mpq_class(out.lhs) <= out.rhs;
    return out;
}

}  // namespace latgeo
