#include "nlbound/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nlbound/errors.hpp"

namespace nlbound {

ModelLabel ModelLabel::of(double chsh_limit) {
    if (!(chsh_limit >= kLocalLimit && chsh_limit <= kNoSignalingLimit)) {
        throw ValidationError("model label CHSH limit must lie in [2, 4], got " + std::to_string(chsh_limit));
    }
    return ModelLabel(chsh_limit);
}

double ModelLabel::chsh_limit() const {
    if (!x_) throw DomainError("bottom label has no CHSH limit");
    return *x_;
}

ModelLabel label_add(const ModelLabel& a, const ModelLabel& b) {
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    return a.chsh_limit() >= b.chsh_limit() ? a : b;
}

int boolean_add(int l1, int l2) {
    if ((l1 != 0 && l1 != 1) || (l2 != 0 && l2 != 1)) throw ValidationError("Boolean scalar must be 0 or 1");
    return l1 | l2;
}

ModelLabel scalar_act(int lambda, const ModelLabel& a) {
    if (lambda != 0 && lambda != 1) throw ValidationError("Boolean scalar must be 0 or 1");
    return lambda == 1 ? a : ModelLabel::bottom();
}

ModelLabel label_mul(const ModelLabel& a, const ModelLabel& b) {
    if (a.is_bottom() || b.is_bottom()) return ModelLabel::bottom();
    if (a.chsh_limit() == kLocalLimit || b.chsh_limit() == kLocalLimit) return ModelLabel::of(kLocalLimit);
    if (a == b) return a;
    throw UndefinedOperation("product of R_" + std::to_string(a.chsh_limit()) + " and R_" +
                             std::to_string(b.chsh_limit()) + " is undefined by the model algebra");
}

LiftValue::LiftValue(double v) : v_(v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("lift value must be positive and finite");
}

LiftValue lift(const ModelLabel& a) {
    if (a.is_bottom()) throw DomainError("cannot lift the bottom label");
    return LiftValue(a.chsh_limit());
}

LiftValue power(const LiftValue& l, double alpha) {
    if (!std::isfinite(alpha)) throw NumericError("lift exponent must be finite");
    const double v = std::pow(l.value(), alpha);
    if (!std::isfinite(v) || v <= 0.0) throw NumericError("lift power left the positive reals");
    return LiftValue(v);
}

LiftValue lift_mul(const LiftValue& l1, const LiftValue& l2) {
    const double v = l1.value() * l2.value();
    if (!std::isfinite(v) || v <= 0.0) throw NumericError("lift product left the positive reals");
    return LiftValue(v);
}

TropicalValue::TropicalValue(double t) : t_(t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("tropical value must be finite and nonnegative");
}

TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b) {
    return a.value() >= b.value() ? a : b;
}

TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b) {
    return TropicalValue(a.value() * b.value());
}

TropicalValue trop_inv(const TropicalValue& a) {
    if (a.value() == 0.0) throw DomainError("tropical zero has no inverse");
    return TropicalValue(1.0 / a.value());
}

double idempotent_grid_node(long long k, long long grid_size) {
    return static_cast<double>(k) / static_cast<double>(grid_size + 1);
}

double idempotent_integral(const std::function<double(double)>& f, long long grid_size) {
    if (grid_size < 2) throw ValidationError("idempotent integral needs grid_size >= 2");
    double sup = -std::numeric_limits<double>::infinity();
    for (long long k = 1; k <= grid_size; ++k) {
        const double v = f(idempotent_grid_node(k, grid_size));
        if (!std::isfinite(v)) throw NumericError("integrand is not finite on the grid");
        sup = std::max(sup, v);
    }
    return sup;
}

}  // namespace nlbound
