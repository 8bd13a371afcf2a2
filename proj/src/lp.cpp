#include "latgeo/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace latgeo::lp {

namespace {

// Standard-form tableau: max c.y, A y = b, y >= 0, b >= 0 after setup.
class Tableau {
public:
    Tableau(std::vector<std::vector<mpq_class>> rows, std::vector<mpq_class> rhs)
        : a_(std::move(rows)), b_(std::move(rhs)), m_(a_.size()),
          ncols_(m_ ? a_[0].size() : 0), basis_(m_) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rows() const { return m_; }
    void set_basis(std::size_t row, std::size_t col) { basis_[row] = col; }
    std::size_t basis(std::size_t row) const { return basis_[row]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
    const mpq_class& rhs(std::size_t r) const { return b_[r]; }

    void drop_row(std::size_t r) {
        a_.erase(a_.begin() + r);
        b_.erase(b_.begin() + r);
        basis_.erase(basis_.begin() + r);
        --m_;
    }

    // Maximizes cost over the current feasible region. allowed(j) gates
    // entering columns. Returns false when unbounded.
    bool run(const std::vector<mpq_class>& cost, const std::vector<bool>& allowed) {
        compute_reduced(cost);
        while (true) {
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (!allowed[j]) continue;
                if (red_[j] < 0) { enter = j; break; }  // Bland: smallest index
            }
            if (enter == ncols_) return true;
            std::size_t leave = m_;
            mpq_class best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                mpq_class ratio = b_[i] / a_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter, cost);
        }
    }

    mpq_class objective_value(const std::vector<mpq_class>& cost) const {
        mpq_class v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * b_[i];
        return v;
    }

    std::vector<mpq_class> solution() const {
        std::vector<mpq_class> y(ncols_, 0);
        for (std::size_t i = 0; i < m_; ++i) y[basis_[i]] = b_[i];
        return y;
    }

    // Pivot with an explicit column choice, used to force artificials out.
    void pivot_raw(std::size_t row, std::size_t col) {
        std::vector<mpq_class> zero(ncols_, 0);
        red_.assign(ncols_, 0);
        pivot(row, col, zero);
    }

private:
    void compute_reduced(const std::vector<mpq_class>& cost) {
        red_.assign(ncols_, 0);
        for (std::size_t j = 0; j < ncols_; ++j) {
            mpq_class z = 0;
            for (std::size_t i = 0; i < m_; ++i) z += cost[basis_[i]] * a_[i][j];
            red_[j] = z - cost[j];
        }
    }

    void pivot(std::size_t leave, std::size_t enter, const std::vector<mpq_class>& cost) {
        mpq_class inv = a_[leave][enter];
        for (auto& v : a_[leave]) v /= inv;
        b_[leave] /= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == leave || a_[i][enter] == 0) continue;
            mpq_class f = a_[i][enter];
            for (std::size_t j = 0; j < ncols_; ++j) a_[i][j] -= f * a_[leave][j];
            b_[i] -= f * b_[leave];
        }
        if (!red_.empty() && red_[enter] != 0) {
            mpq_class f = red_[enter];
            for (std::size_t j = 0; j < ncols_; ++j) red_[j] -= f * a_[leave][j];
        }
        basis_[leave] = enter;
        (void)cost;
    }

    std::vector<std::vector<mpq_class>> a_;
    std::vector<mpq_class> b_;
    std::size_t m_;
    std::size_t ncols_;
    std::vector<std::size_t> basis_;
    std::vector<mpq_class> red_;
};

}  // namespace

Result solve(const Problem& problem) {
    const int n = problem.nvars;
    const std::size_t m_in = problem.coeffs.size();

    // Column layout: split free variables, keep nonneg ones single.
    // col_pos[j] = column of x_j (positive part); col_neg[j] = column of the
    // negative part or SIZE_MAX for nonneg variables.
    std::vector<std::size_t> col_pos(n), col_neg(n, SIZE_MAX);
    std::size_t nv = 0;
    for (int j = 0; j < n; ++j) {
        col_pos[j] = nv++;
        bool is_nonneg = j < static_cast<int>(problem.nonneg.size()) && problem.nonneg[j];
        if (!is_nonneg) col_neg[j] = nv++;
    }

    // Expand EQ rows into two inequalities, then add slack per row.
    std::vector<std::vector<mpq_class>> raw;
    std::vector<mpq_class> rhs;
    for (std::size_t i = 0; i < m_in; ++i) {
        std::vector<mpq_class> row(nv, 0);
        for (int j = 0; j < n; ++j) {
            row[col_pos[j]] = problem.coeffs[i][j];
            if (col_neg[j] != SIZE_MAX) row[col_neg[j]] = -problem.coeffs[i][j];
        }
        raw.push_back(row);
        rhs.push_back(problem.rhs[i]);
        if (problem.types[i] == RowType::EQ) {
            for (auto& v : row) v = -v;
            raw.push_back(std::move(row));
            rhs.push_back(-problem.rhs[i]);
        }
    }
    const std::size_t m = raw.size();
    const std::size_t nslack = m;
    std::size_t nart = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (rhs[i] < 0) ++nart;

    const std::size_t ncols = nv + nslack + nart;
    std::vector<std::vector<mpq_class>> tab(m, std::vector<mpq_class>(ncols, 0));
    std::vector<mpq_class> b(m);
    std::vector<std::size_t> art_cols;
    std::size_t next_art = nv + nslack;
    Tableau t{{}, {}};
    {
        std::vector<std::size_t> basis(m);
        for (std::size_t i = 0; i < m; ++i) {
            bool neg = rhs[i] < 0;
            for (std::size_t j = 0; j < nv; ++j) tab[i][j] = neg ? -raw[i][j] : raw[i][j];
            tab[i][nv + i] = neg ? -1 : 1;
            b[i] = neg ? mpq_class(-rhs[i]) : rhs[i];
            if (neg) {
                tab[i][next_art] = 1;
                basis[i] = next_art;
                art_cols.push_back(next_art);
                ++next_art;
            } else {
                basis[i] = nv + i;
            }
        }
        t = Tableau(std::move(tab), std::move(b));
        for (std::size_t i = 0; i < m; ++i) t.set_basis(i, basis[i]);
    }

    std::vector<bool> allowed(ncols, true);
    if (nart > 0) {
        std::vector<mpq_class> phase1(ncols, 0);
        for (auto c : art_cols) phase1[c] = -1;
        bool bounded = t.run(phase1, allowed);
        assert(bounded);
        (void)bounded;
        if (t.objective_value(phase1) != 0) return {Status::Infeasible, 0, {}};
        // Drive remaining artificials out of the basis.
        for (std::size_t i = t.rows(); i-- > 0;) {
            if (t.basis(i) < nv + nslack) continue;
            std::size_t col = ncols;
            for (std::size_t j = 0; j < nv + nslack; ++j)
                if (t.at(i, j) != 0) { col = j; break; }
            if (col == ncols) {
                t.drop_row(i);
            } else {
                t.pivot_raw(i, col);
            }
        }
        for (auto c : art_cols) allowed[c] = false;
    }

    std::vector<mpq_class> cost(ncols, 0);
    for (int j = 0; j < n; ++j) {
        cost[col_pos[j]] = problem.objective[j];
        if (col_neg[j] != SIZE_MAX) cost[col_neg[j]] = -problem.objective[j];
    }
    if (!t.run(cost, allowed)) return {Status::Unbounded, 0, {}};

    Result res;
    res.status = Status::Optimal;
    res.value = t.objective_value(cost);
    auto y = t.solution();
    res.x.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        res.x[j] = y[col_pos[j]];
        if (col_neg[j] != SIZE_MAX) res.x[j] -= y[col_neg[j]];
    }
    return res;
}

}  // namespace latgeo::lp
