#include "latgeo/expand.hpp"

#include <stdexcept>

#include "latgeo/geom.hpp"
#include "latgeo/numeric.hpp"

namespace latgeo {

namespace {

struct NeedLargerBox : std::exception {};
struct RetryPerturbation : std::exception {};

QPoint negated(const QPoint& v) {
    QPoint out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(-c);
    return out;
}

// Smallest positive violation of any row over the box's lattice points;
// throws NeedLargerBox when some row has no violating point in the box
// (the working region must see past every facet).
mpq_class quarter_min_violation(const HRep& p, const Box& box) {
    std::vector<std::optional<mpq_class>> min_over(p.rows.size());
    for_each_lattice_point(box, [&](const Point& x) {
        for (std::size_t i = 0; i < p.rows.size(); ++i) {
            mpq_class slack = p.rows[i].value_at(x) - p.rows[i].offset;
            if (slack > 0 && (!min_over[i] || slack < *min_over[i])) min_over[i] = slack;
        }
    });
    std::optional<mpq_class> overall;
    for (const auto& m : min_over) {
        if (!m) throw NeedLargerBox{};
        if (!overall || *m < *overall) overall = *m;
    }
    return *overall / 4;
}

mpz_class box_sup_norm(const Box& box) {
    mpz_class m = 1;
    for (std::size_t i = 0; i < box.lo.size(); ++i) {
        m = std::max(m, mpz_class(abs(box.lo[i])));
        m = std::max(m, mpz_class(abs(box.hi[i])));
    }
    return m;
}

// One construction round with a fixed perturbation; throws on any failed
// postcondition so the caller can reseed or grow the box.
ExpansionResult attempt_expand(const HRep& p, const Box& box, const PointSet& interior,
                               Rng& rng) {
    const int n = p.dim;
    const std::size_t m = p.rows.size();
    const mpq_class eps = quarter_min_violation(p, box);
    const mpz_class sup = box_sup_norm(box);

    // |bar_a . x| <= n * scale * sup = eps/2 < eps for all x in the box.
    mpq_class scale = eps / (2 * n * sup);
    std::vector<QPoint> pert_rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        pert_rows[i] = p.rows[i].normal;
        for (int j = 0; j < n; ++j)
            pert_rows[i][j] += (2 * rng.unit_rational(96) - 1) * scale;
    }

    // Sequential relaxation: row i's offset becomes the minimum of the
    // perturbed functional over the lattice points strictly beyond facet i
    // that earlier rows already admitted and later rows nearly admit.
    std::vector<mpq_class> relaxed(m);
    std::vector<Point> facet_points(m);
    for (std::size_t i = 0; i < m; ++i) {
        HRep stage;
        stage.dim = n;
        for (std::size_t j = 0; j < i; ++j) stage.add_row(pert_rows[j], relaxed[j]);
        stage.add_row(negated(pert_rows[i]), -(p.rows[i].offset + 2 * eps));
        for (std::size_t j = i + 1; j < m; ++j)
            stage.add_row(pert_rows[j], p.rows[j].offset + eps);

        std::optional<mpq_class> best;
        Point best_point;
        int ties = 0;
        for_each_lattice_point(box, [&](const Point& x) {
            if (!stage.contains(x)) return;
            mpq_class v = dot_q(pert_rows[i], to_rational(x));
            if (!best || v < *best) {
                best = v;
                best_point = x;
                ties = 1;
            } else if (v == *best) {
                ++ties;
            }
        });
        if (!best) throw NeedLargerBox{};
        if (ties != 1) throw RetryPerturbation{};
        relaxed[i] = *best;
        facet_points[i] = best_point;
    }

    ExpansionResult res;
    res.expanded.dim = n;
    for (std::size_t i = 0; i < m; ++i) res.expanded.add_row(pert_rows[i], relaxed[i]);
    res.facet_points = facet_points;
    res.original_interior = interior;

    // Postconditions, by global enumeration over the result itself.
    if (!is_bounded(res.expanded)) throw RetryPerturbation{};
    PointSet all = enumerate_lattice_points(res.expanded);
    PointSet strict(n), facet_set(n);
    for (const auto& z : all.points()) {
        std::size_t tight = 0, tight_row = m;
        for (std::size_t i = 0; i < m; ++i)
            if (res.expanded.rows[i].value_at(z) == res.expanded.rows[i].offset) {
                ++tight;
                tight_row = i;
            }
        if (tight == 0) {
            strict.insert(z);
        } else if (tight == 1 && facet_points[tight_row] == z) {
            facet_set.insert(z);  // on exactly its own facet's relative interior
        } else {
            throw RetryPerturbation{};  // shared point, or a stray facet point
        }
    }
    if (!(strict == interior)) throw RetryPerturbation{};
    if (facet_set.size() != m) throw RetryPerturbation{};  // facet points must be distinct
    if (!in_convex_position(facet_set)) throw RetryPerturbation{};
    return res;
}

}  // namespace

NonRedundancyReport non_redundant_check(const HRep& p, const Box& box) {
    if (!is_bounded(p))
        throw std::invalid_argument("non_redundant_check: infinite lattice set");
    NonRedundancyReport report;
    report.box = box;
    report.rows.resize(p.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        RowWitness& rw = report.rows[i];
        HRep rest = p.without_row(i);
        for_each_lattice_point(box, [&](const Point& x) {
            if (rw.witness) return;
            if (rest.contains(x) && !p.rows[i].satisfied_by(x)) rw.witness = x;
        });
        rw.unbounded_relaxation = !is_bounded(rest);
        rw.redundant = !rw.witness && !rw.unbounded_relaxation;
    }
    return report;
}

ExpansionResult bell_expand(const HRep& p, std::uint64_t seed) {
    if (p.rows.empty()) throw std::invalid_argument("bell_expand: empty system");
    if (!is_bounded(p)) throw std::invalid_argument("bell_expand: infinite lattice set");
    std::optional<Box> base = integer_bounding_box(p);
    if (!base) throw std::invalid_argument("bell_expand: empty polyhedron");
    PointSet interior = enumerate_lattice_points(p);

    long inflation = p.dim + 1;
    Box box = base->inflated(inflation);
    // Each row needs a lattice point that it alone cuts off: those points
    // witness non-redundancy and keep every construction stage feasible.
    if (!non_redundant_check(p, box.inflated(inflation)).all_non_redundant())
        throw std::invalid_argument("bell_expand: input system is redundant");

    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        try {
            ExpansionResult res = attempt_expand(p, box, interior, rng);
            res.working_box = box;
            res.inflation = inflation;
            res.seed = seed;
            res.attempts = attempt + 1;
            return res;
        } catch (const NeedLargerBox&) {
            if (inflation > 1024)
                throw std::runtime_error("bell_expand: working box growth exhausted");
            inflation *= 2;
            box = base->inflated(inflation);
        } catch (const RetryPerturbation&) {
            continue;
        }
    }
    throw std::runtime_error("bell_expand: perturbation retry budget exhausted");
}

HRep shrink_one_facet(const ExpansionResult& res, std::size_t keep) {
    const std::size_t m = res.expanded.rows.size();
    if (keep >= m) throw std::out_of_range("shrink_one_facet: row index out of range");
    // Tighten every other row by half its smallest slack over the points
    // that must survive: the interior set plus the kept facet's point.
    std::optional<mpq_class> min_slack;
    std::vector<Point> survivors = res.original_interior.points();
    survivors.push_back(res.facet_points[keep]);
    for (std::size_t j = 0; j < m; ++j) {
        if (j == keep) continue;
        for (const auto& x : survivors) {
            mpq_class slack = res.expanded.rows[j].offset - res.expanded.rows[j].value_at(x);
            if (slack <= 0)
                throw std::invalid_argument("shrink_one_facet: corrupted expansion result");
            if (!min_slack || slack < *min_slack) min_slack = slack;
        }
    }
    mpq_class delta = min_slack ? *min_slack / 2 : mpq_class(1);
    HRep out;
    out.dim = res.expanded.dim;
    for (std::size_t j = 0; j < m; ++j)
        out.add_row(res.expanded.rows[j].normal,
                    j == keep ? res.expanded.rows[j].offset : res.expanded.rows[j].offset - delta);
    return out;
}

}  // namespace latgeo
