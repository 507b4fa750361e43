#pragma once

/**
 * @file semiring.hpp
 * @brief Model labels R_X and their characteristic-1 algebra.
 *
 * A ModelLabel names a model by its CHSH limit X in [2, 4], or is the
 * adjoined additive zero (bottom). Addition is idempotent (max), the Boolean
 * semifield {0, 1} acts by 1x = x and 0x = bottom. Multiplication is only
 * defined where the wiring argument fixes it: R_2 absorbs, bottom
 * annihilates, and R_X R_X = R_X.
 *
 * The extension B = {0, 1} inside R+max is TropicalValue: nonnegative reals
 * under (max, *). It is isomorphic to max-plus through t -> log t, which is
 * not exposed.
 */

#include <functional>
#include <optional>

namespace nlbound {

inline constexpr double kLocalLimit = 2.0;
inline constexpr double kNoSignalingLimit = 4.0;

class ModelLabel {
public:
    static ModelLabel bottom() noexcept { return ModelLabel(); }
    /// Throws ValidationError unless 2 <= x <= 4.
    static ModelLabel of(double chsh_limit);

    bool is_bottom() const noexcept { return !x_.has_value(); }
    /// Throws DomainError on bottom.
    double chsh_limit() const;
    const std::optional<double>& value() const noexcept { return x_; }

    bool operator==(const ModelLabel&) const = default;

private:
    ModelLabel() = default;
    explicit ModelLabel(double x) : x_(x) {}
    std::optional<double> x_;
};

ModelLabel label_add(const ModelLabel& a, const ModelLabel& b);
inline ModelLabel operator+(const ModelLabel& a, const ModelLabel& b) { return label_add(a, b); }

/// Boolean semifield addition: 1 + 1 = 1.
int boolean_add(int l1, int l2);

/// lambda must be 0 or 1 (ValidationError otherwise).
ModelLabel scalar_act(int lambda, const ModelLabel& a);

/// Throws UndefinedOperation for distinct labels both strictly inside (2, 4).
ModelLabel label_mul(const ModelLabel& a, const ModelLabel& b);

// Multiplicative lift of a label into the positive reals, where rational and
// then real powers make sense.
class LiftValue {
public:
    /// Throws ValidationError unless v > 0 and finite.
    explicit LiftValue(double v);
    double value() const noexcept { return v_; }
    bool operator==(const LiftValue&) const = default;

private:
    double v_;
};

LiftValue lift(const ModelLabel& a);
LiftValue power(const LiftValue& l, double alpha);
LiftValue lift_mul(const LiftValue& l1, const LiftValue& l2);

class TropicalValue {
public:
    explicit TropicalValue(double t);
    static TropicalValue zero() noexcept { return TropicalValue(); }
    static TropicalValue one() noexcept { return TropicalValue(1.0); }
    double value() const noexcept { return t_; }
    bool operator==(const TropicalValue&) const = default;

private:
    TropicalValue() = default;
    double t_ = 0.0;
};

TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b);
TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b);
/// Multiplicative inverse, t > 0 only.
TropicalValue trop_inv(const TropicalValue& a);

/// Node alpha_k = k / (grid_size + 1) for k = 1..grid_size.
double idempotent_grid_node(long long k, long long grid_size);

/// Sup of f over the uniform open grid above. Doubling grid_size + 1 nests the
/// grids, so the value is non-decreasing under that refinement.
/// Throws ValidationError for grid_size < 2, NumericError for non-finite f.
double idempotent_integral(const std::function<double(double)>& f, long long grid_size);

}  // namespace nlbound
