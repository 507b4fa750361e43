#pragma once

// Dense two-phase simplex for small standard-form programs
//   minimize c^T x  subject to  A x = b,  x >= 0.
// Bland's rule throughout, so it terminates on degenerate problems (the
// locality LP is highly degenerate).

#include <cstddef>
#include <vector>

namespace nlbound::lp {

struct Problem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;  // row-major rows x cols
    std::vector<double> b;
    std::vector<double> c;

    Problem(std::size_t m, std::size_t n) : rows(m), cols(n), a(m * n, 0.0), b(m, 0.0), c(n, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

struct Solution {
    Status status = Status::infeasible;
    double objective = 0.0;
    std::vector<double> x;
    // Phase I optimum (sum of artificials); zero up to rounding when feasible.
    double infeasibility = 0.0;
    std::size_t pivots = 0;
};

Solution solve(const Problem& problem, double feasibility_tol = 1e-9);

}  // namespace nlbound::lp
