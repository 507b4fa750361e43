#include "nlbound/deform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <optional>
#include <thread>
#include <string>

#include "nlbound/errors.hpp"
#include "nlbound/quadrature.hpp"
#include "nlbound/semiring.hpp"

namespace nlbound {
namespace {

constexpr double kConvergenceTol = 1e-8;

void require_limit(double v, const char* name) {
    if (!(v >= kLocalLimit && v <= kNoSignalingLimit)) {
        throw ValidationError(std::string(name) + " must lie in [2, 4]");
    }
}

void require_temperature(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw ValidationError("T must be positive and finite");
}

// Unchecked form; alpha strictly inside (0, 1).
double entropy_open(double alpha) {
    return -alpha * std::log(alpha) - (1.0 - alpha) * std::log1p(-alpha);
}

double integrand_open(double alpha, double log_x, double log_y, double T) {
    return std::exp(T * entropy_open(alpha) + alpha * log_y + (1.0 - alpha) * log_x);
}

// Quadrature rules for orders n, 2n, 4n, built lazily and reused across the
// many Z evaluations of one solve.
class CombinationIntegrator {
public:
    explicit CombinationIntegrator(int order) : order_(order) {}

    CombineResult operator()(double Y, double X, double T) {
        const double lx = std::log(X), ly = std::log(Y);
        auto f = [=](double a) { return integrand_open(a, lx, ly, T); };

        CombineResult r;
        const double z1 = integrate_unit_interval(f, rule(0));
        const double z2 = integrate_unit_interval(f, rule(1));
        r.n_evals = 3LL * order_;
        r.Z = z1;
        r.abs_error_estimate = std::abs(z2 - z1);
        if (r.abs_error_estimate > kConvergenceTol) {
            const double z4 = integrate_unit_interval(f, rule(2));
            r.n_evals += 4LL * order_;
            r.Z = z2;
            r.abs_error_estimate = std::abs(z4 - z2);
            if (r.abs_error_estimate > kConvergenceTol) {
                throw NumericError("combination integral not converged after doubling twice (order " +
                                   std::to_string(4 * order_) + ", change " +
                                   std::to_string(r.abs_error_estimate) + ")");
            }
        }
        if (!std::isfinite(r.Z) || !(r.Z > 0.0)) throw NumericError("combination integral is not positive");
        return r;
    }

private:
    const QuadratureRule& rule(int level) {
        auto& slot = rules_[level];
        if (!slot) slot = gauss_legendre(order_ << level);
        return *slot;
    }

    int order_;
    std::optional<QuadratureRule> rules_[3];
};

}  // namespace

void DeformationParams::validate() const {
    require_temperature(T);
    if (quad_order < 8) throw ValidationError("quad_order must be at least 8");
    if (!(root_tol > 0.0)) throw ValidationError("root_tol must be positive");
    if (!(target > 0.0) || !std::isfinite(target)) throw ValidationError("target must be positive");
    if (max_iterations < 1) throw ValidationError("max_iterations must be positive");
}

double binary_entropy(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("entropy argument must lie in [0, 1]");
    if (alpha == 0.0 || alpha == 1.0) return 0.0;
    return entropy_open(alpha);
}

double omega(double alpha, double T) {
    require_temperature(T);
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("omega argument must lie in [0, 1]");
    if (alpha == 0.0 || alpha == 1.0) return 0.0;
    return std::exp(T * entropy_open(alpha));
}

double combine_integrand(double alpha, double X, double Y, double T) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("integrand argument must lie in (0, 1)");
    require_limit(X, "X");
    require_limit(Y, "Y");
    require_temperature(T);
    return integrand_open(alpha, std::log(X), std::log(Y), T);
}

CombineResult combined_chsh(double Y, double X, const DeformationParams& params) {
    params.validate();
    require_limit(X, "X");
    require_limit(Y, "Y");
    CombinationIntegrator integrate(params.quad_order);
    return integrate(Y, X, params.T);
}

double tsirelson_gap(double x) {
    if (!(x > 0.0)) throw ValidationError("tsirelson_gap needs x > 0");
    return (kTsirelsonBound - x) / kTsirelsonBound;
}

SolveResult solve_xmax(const DeformationParams& params) {
    params.validate();
    CombinationIntegrator integrate(params.quad_order);
    auto residual = [&](double x) { return integrate(kLocalLimit, x, params.T).Z - params.target; };

    double lo = kLocalLimit, hi = kNoSignalingLimit;
    const double r_lo = residual(lo);
    const double r_hi = residual(hi);
    if (r_lo > 0.0 || r_hi < 0.0) {
        char msg[200];
        std::snprintf(msg, sizeof msg, "target %.12g outside [Z(2,2), Z(2,4)] = [%.12g, %.12g] at T = %.12g",
                      params.target, r_lo + params.target, r_hi + params.target, params.T);
        throw BracketError(msg);
    }

    SolveResult out;
    if (std::abs(r_lo) <= params.root_tol) {
        out = {lo, r_lo, 0, {lo, lo}, tsirelson_gap(lo)};
        return out;
    }
    if (std::abs(r_hi) <= params.root_tol) {
        out = {hi, r_hi, 0, {hi, hi}, tsirelson_gap(hi)};
        return out;
    }

    for (int it = 1; it <= params.max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = residual(mid);
        if (r < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (std::abs(r) <= params.root_tol && (hi - lo) <= params.root_tol) {
            out = {mid, r, it, {lo, hi}, tsirelson_gap(mid)};
            return out;
        }
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            if (std::abs(r) <= params.root_tol) {
                out = {mid, r, it, {lo, hi}, tsirelson_gap(mid)};
                return out;
            }
            break;
        }
    }
    throw NumericError("bisection did not reach the residual tolerance");
}

std::vector<SweepRow> sweep_T(const std::vector<double>& T_values, const DeformationParams& params) {
    auto run_row = [&params](double T) {
        SweepRow row;
        row.T = T;
        DeformationParams p = params;
        p.T = T;
        try {
            row.result = solve_xmax(p);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        return row;
    };

    // Rows are independent; run them in batches and merge in input order.
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    std::vector<SweepRow> rows;
    rows.reserve(T_values.size());
    for (std::size_t start = 0; start < T_values.size(); start += width) {
        const std::size_t stop = std::min(T_values.size(), start + width);
        std::vector<std::future<SweepRow>> jobs;
        for (std::size_t i = start; i < stop; ++i) jobs.push_back(std::async(std::launch::async, run_row, T_values[i]));
        for (auto& j : jobs) rows.push_back(j.get());
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "T,x_max,residual,gap\n";
    char line[160];
    for (const auto& row : rows) {
        if (row.result) {
            std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g\n", row.T, row.result->x_max,
                          row.result->residual, row.result->gap_to_tsirelson);
        } else {
            std::snprintf(line, sizeof line, "%.12g,nan,nan,nan\n", row.T);
        }
        out += line;
    }
    return out;
}

double idempotent_combined_chsh(double Y, double X, double T, long long grid) {
    require_limit(X, "X");
    require_limit(Y, "Y");
    require_temperature(T);
    const double lx = std::log(X), ly = std::log(Y);
    return idempotent_integral([=](double a) { return integrand_open(a, lx, ly, T); }, grid);
}

}  // namespace nlbound
