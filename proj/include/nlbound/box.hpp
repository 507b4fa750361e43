#pragma once

/**
 * @file box.hpp
 * @brief Bipartite boxes with binary inputs (x, y) and binary outputs (a, b).
 *
 * A box is the table of joint probabilities P(ab|xy), stored flat in the
 * order index = 8x + 4y + 2a + b. Correlators, CHSH values, the canonical
 * boxes (deterministic, PR, Tsirelson, isotropic) and two independent
 * locality tests live here.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace nlbound {

inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kClampTol = 1e-12;
inline constexpr double kNoSignalingTol = 1e-7;
inline constexpr double kLpReconstructionTol = 1e-7;
inline constexpr double kFacetSlack = 1e-9;

constexpr std::size_t box_index(int x, int y, int a, int b) noexcept {
    return static_cast<std::size_t>(8 * x + 4 * y + 2 * a + b);
}

using ProbabilityTable = std::array<double, 16>;

class BehaviorBox {
public:
    /// Validates and clamps. Entries within 1e-12 of [0, 1] are clamped, every
    /// (x, y) block must sum to 1 within 1e-9. Throws ValidationError.
    static BehaviorBox from_table(const ProbabilityTable& p);

    double operator()(int x, int y, int a, int b) const noexcept {
        return p_[box_index(x, y, a, b)];
    }
    const ProbabilityTable& table() const noexcept { return p_; }

    bool operator==(const BehaviorBox&) const = default;

private:
    explicit BehaviorBox(const ProbabilityTable& p) : p_(p) {}
    ProbabilityTable p_{};
};

/// Four correlators E(x, y) stored at 2x + y.
struct CorrelatorTable {
    std::array<double, 4> e{};
    double operator()(int x, int y) const noexcept { return e[2 * x + y]; }
};

struct ChshMax {
    double value = 0.0;
    // Starred input pairs (2x* + y*) achieving the maximum; ties all listed.
    std::vector<int> facets;
};

struct NoSignalingReport {
    bool no_signaling = true;
    // |P_A(a|x, y=0) - P_A(a|x, y=1)| at 2x + a.
    std::array<double, 4> alice_residuals{};
    // |P_B(b|x=0, y) - P_B(b|x=1, y)| at 2y + b.
    std::array<double, 4> bob_residuals{};
};

enum class LocalityMethod { facets, lp };

struct LocalityReport {
    bool is_local = false;
    LocalityMethod method = LocalityMethod::facets;
    // Facet k in 0..7: starred pair k / 2, sign + for even k and - for odd k.
    std::optional<int> violated_facet;
    double max_facet_value = 0.0;
    // Weights over deterministic_box(k / 4, k % 4), present when the LP is feasible.
    std::optional<std::array<double, 16>> lp_weights;
    // Smallest achievable max-entry reconstruction error (LP only).
    double lp_residual = 0.0;
};

CorrelatorTable correlators(const BehaviorBox& box);
double chsh_canonical(const BehaviorBox& box);

/// max over (x*, y*) of |sum E - 2 E(x*, y*)|.
ChshMax chsh_max(const BehaviorBox& box);

/// The 8 CHSH facet values s * (sum E - 2 E(x*, y*)), facet k = 2(2x* + y*) + (s < 0).
std::array<double, 8> chsh_facet_values(const BehaviorBox& box);

NoSignalingReport check_no_signaling(const BehaviorBox& box, double tol = kNoSignalingTol);

// Local strategy encoding: 0 -> constant 0, 1 -> constant 1, 2 -> identity, 3 -> negation.
int apply_strategy(int f, int input);
BehaviorBox deterministic_box(int f_alice, int f_bob);
BehaviorBox pr_box();
BehaviorBox uniform_box();
BehaviorBox isotropic_box(double visibility);
BehaviorBox tsirelson_box();

/// Uniform-marginal box p = (1 + (-1)^(a xor b) E(x, y)) / 4. Each |E| <= 1.
BehaviorBox box_from_correlators(const std::array<double, 4>& e);

BehaviorBox convex_mix(const BehaviorBox& b1, const BehaviorBox& b2, double lambda);

/// Facet test; valid only for no-signaling boxes (throws DomainError otherwise).
LocalityReport is_local_facets(const BehaviorBox& box);

/// Minimises the max-entry error of a convex combination of the 16 deterministic
/// boxes; local iff that error is at most 1e-7.
LocalityReport is_local_lp(const BehaviorBox& box);

/// No-signaling box with uniform marginals and correlators uniform in [-1, 1].
BehaviorBox random_uniform_marginal_box(std::mt19937_64& rng);

/// Random point of the no-signaling polytope: a flat-Dirichlet mixture of 1 to 4
/// of its 24 vertices (16 deterministic, 8 PR-type). Marginals are generally biased.
BehaviorBox random_no_signaling_box(std::mt19937_64& rng);

/// Uniform double in [0, 1) from the top 53 bits; platform independent.
double uniform01(std::mt19937_64& rng);

bool approx_equal(const BehaviorBox& a, const BehaviorBox& b, double tol);
double max_abs_diff(const BehaviorBox& a, const BehaviorBox& b);

}  // namespace nlbound
