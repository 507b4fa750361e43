#pragma once

#include <functional>
#include <vector>

namespace nlbound {

struct QuadratureRule {
    std::vector<double> nodes;    // on (-1, 1), ascending, mirror-symmetric
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n. Throws
/// ValidationError for n < 1.
QuadratureRule gauss_legendre(int n);

/// Integral of f over (0, 1) through alpha = 3u^2 - 2u^3 followed by
/// Gauss-Legendre in u. Endpoint terms like alpha log alpha pick up a factor
/// u(1 - u) from the Jacobian. f is never evaluated at 0 or 1.
double integrate_unit_interval(const std::function<double(double)>& f, const QuadratureRule& rule);

}  // namespace nlbound
