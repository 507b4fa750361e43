#include "nlbound/simplex.hpp"

#include <cmath>
#include <limits>

#include "nlbound/errors.hpp"

namespace nlbound::lp {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr std::size_t kMaxPivots = 50000;

// Tableau with m constraint rows plus one objective row; the last column is the rhs.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), t_((m + 1) * (n + 1), 0.0), basis_(m, 0) {}

    double& operator()(std::size_t i, std::size_t j) { return t_[i * (n_ + 1) + j]; }
    double operator()(std::size_t i, std::size_t j) const { return t_[i * (n_ + 1) + j]; }
    double& rhs(std::size_t i) { return (*this)(i, n_); }
    std::size_t& basic(std::size_t i) { return basis_[i]; }
    std::size_t basic(std::size_t i) const { return basis_[i]; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    void pivot(std::size_t r, std::size_t c) {
        const double inv = 1.0 / (*this)(r, c);
        for (std::size_t j = 0; j <= n_; ++j) (*this)(r, j) *= inv;
        (*this)(r, c) = 1.0;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r) continue;
            const double f = (*this)(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            (*this)(i, c) = 0.0;
        }
        basis_[r] = c;
    }

    // Objective row holds reduced costs; minimise over columns allowed[j].
    Status optimise(const std::vector<bool>& allowed, std::size_t& pivots) {
        while (true) {
            if (pivots >= kMaxPivots) return Status::iteration_limit;
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (allowed[j] && (*this)(m_, j) < -kPivotTol) {
                    enter = j;  // Bland: lowest index
                    break;
                }
            }
            if (enter == n_) return Status::optimal;

            std::size_t leave = m_;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m_; ++i) {
                const double aij = (*this)(i, enter);
                if (aij <= kPivotTol) continue;
                const double ratio = (*this)(i, n_) / aij;
                if (ratio < best - 1e-14 || (ratio <= best + 1e-14 && leave < m_ && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m_) return Status::unbounded;
            pivot(leave, enter);
            ++pivots;
        }
    }

private:
    std::size_t m_, n_;
    std::vector<double> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem, double feasibility_tol) {
    const std::size_t m = problem.rows;
    const std::size_t n = problem.cols;
    if (problem.a.size() != m * n || problem.b.size() != m || problem.c.size() != n) {
        throw ValidationError("lp: inconsistent problem dimensions");
    }

    // Columns: n structural, then m artificials.
    Tableau tab(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tab(i, j) = sign * problem.at(i, j);
        tab(i, n + i) = 1.0;
        tab.rhs(i) = sign * problem.b[i];
        tab.basic(i) = n + i;
    }
    // Phase I objective: sum of artificials, expressed in the non-basic columns.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab(m, j) -= tab(i, j);
        tab(m, n + m) -= tab.rhs(i);
    }

    Solution sol;
    std::vector<bool> allowed(n + m, true);
    Status st = tab.optimise(allowed, sol.pivots);
    if (st == Status::iteration_limit) {
        sol.status = st;
        return sol;
    }
    sol.infeasibility = -tab(m, n + m);
    if (sol.infeasibility > feasibility_tol) {
        sol.status = Status::infeasible;
        return sol;
    }

    // Drive remaining (zero-valued) artificials out of the basis; rows where no
    // structural pivot exists are redundant and stay inert.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basic(i) < n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(tab(i, j)) > 1e-9) {
                tab.pivot(i, j);
                ++sol.pivots;
                break;
            }
        }
    }
    for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;

    // Phase II objective row.
    for (std::size_t j = 0; j <= n + m; ++j) tab(m, j) = 0.0;
    for (std::size_t j = 0; j < n; ++j) tab(m, j) = problem.c[j];
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t bj = tab.basic(i);
        if (bj >= n) continue;
        const double cb = problem.c[bj];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= n + m; ++j) tab(m, j) -= cb * tab(i, j);
    }

    st = tab.optimise(allowed, sol.pivots);
    sol.status = st;
    if (st != Status::optimal) return sol;

    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basic(i) < n) sol.x[tab.basic(i)] = std::max(0.0, tab.rhs(i));
    }
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += problem.c[j] * sol.x[j];
    return sol;
}

}  // namespace nlbound::lp
