#pragma once

/**
 * @file deform.hpp
 * @brief Entropy-weighted combination of CHSH limits and the bound X_max.
 *
 * Two models with limits Y and X combine to
 *
 *     Z(Y, X; T) = integral_0^1 w(alpha, T) Y^alpha X^(1 - alpha) d alpha,
 *     w(alpha, T) = alpha^(-T alpha) (1 - alpha)^(-T (1 - alpha)) = exp(T S(alpha)),
 *
 * with S the natural-log binary entropy. Requiring Z(2, X; 1) = 4 pins
 * X_max ~ 2.82355, within 0.17% of 2 sqrt 2.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nlbound {

inline constexpr double kTsirelsonBound = 2.8284271247461900976;  // 2 sqrt 2

struct DeformationParams {
    double T = 1.0;
    int quad_order = 128;
    double root_tol = 1e-8;
    double target = 4.0;
    int max_iterations = 200;

    /// Throws ValidationError when T <= 0, quad_order < 8, root_tol <= 0 or
    /// target <= 0.
    void validate() const;
};

struct CombineResult {
    double Z = 0.0;
    double abs_error_estimate = 0.0;
    long long n_evals = 0;
};

struct SolveResult {
    double x_max = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::pair<double, double> bracket{2.0, 4.0};
    double gap_to_tsirelson = 0.0;
};

double binary_entropy(double alpha);

/// exp(T S(alpha)) inside (0, 1); exactly 0 at the endpoints.
double omega(double alpha, double T);

double combine_integrand(double alpha, double X, double Y, double T);

/// Gauss-Legendre with params.quad_order nodes; the error estimate is the
/// change on doubling the order. If that exceeds 1e-8 the order is doubled
/// once more; failing again throws NumericError.
CombineResult combined_chsh(double Y, double X, const DeformationParams& params = {});

/// Bisection on [2, 4] for Z(2, X; T) = target. Stops once |residual| <=
/// root_tol and the bracket is no wider than root_tol. Throws BracketError
/// when target lies outside [Z(2, 2), Z(2, 4)].
SolveResult solve_xmax(const DeformationParams& params = {});

double tsirelson_gap(double x);

struct SweepRow {
    double T = 0.0;
    std::optional<SolveResult> result;
    std::string error;  // set when result is empty
};

std::vector<SweepRow> sweep_T(const std::vector<double>& T_values, const DeformationParams& params = {});

/// CSV with header T,x_max,residual,gap; %.12g; failed rows carry nan.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Grid supremum of the combination integrand (the idempotent reading).
double idempotent_combined_chsh(double Y, double X, double T, long long grid = 1000000);

}  // namespace nlbound
