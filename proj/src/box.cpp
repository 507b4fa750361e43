#include "nlbound/box.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlbound/errors.hpp"
#include "nlbound/simplex.hpp"

namespace nlbound {

BehaviorBox BehaviorBox::from_table(const ProbabilityTable& p) {
    ProbabilityTable q = p;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double v = q[i];
        if (!std::isfinite(v)) {
            throw ValidationError("box entry " + std::to_string(i) + " is not finite");
        }
        if (v < -kClampTol || v > 1.0 + kClampTol) {
            throw ValidationError("box entry " + std::to_string(i) + " outside [0, 1]: " + std::to_string(v));
        }
        q[i] = std::clamp(v, 0.0, 1.0);
    }
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            double s = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) s += q[box_index(x, y, a, b)];
            if (std::abs(s - 1.0) > kNormalizationTol) {
                throw ValidationError("box block (x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                                      ") sums to " + std::to_string(s));
            }
        }
    }
    return BehaviorBox(q);
}

CorrelatorTable correlators(const BehaviorBox& box) {
    CorrelatorTable t;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            t.e[2 * x + y] = box(x, y, 0, 0) + box(x, y, 1, 1) - box(x, y, 0, 1) - box(x, y, 1, 0);
        }
    }
    return t;
}

double chsh_canonical(const BehaviorBox& box) {
    const auto e = correlators(box);
    return std::abs(e(0, 0) + e(0, 1) + e(1, 0) - e(1, 1));
}

std::array<double, 8> chsh_facet_values(const BehaviorBox& box) {
    const auto e = correlators(box);
    const double total = e.e[0] + e.e[1] + e.e[2] + e.e[3];
    std::array<double, 8> f{};
    for (int k = 0; k < 4; ++k) {
        const double s = total - 2.0 * e.e[k];
        f[2 * k] = s;
        f[2 * k + 1] = -s;
    }
    return f;
}

ChshMax chsh_max(const BehaviorBox& box) {
    const auto e = correlators(box);
    const double total = e.e[0] + e.e[1] + e.e[2] + e.e[3];
    std::array<double, 4> v{};
    for (int k = 0; k < 4; ++k) v[k] = std::abs(total - 2.0 * e.e[k]);
    ChshMax out;
    out.value = *std::max_element(v.begin(), v.end());
    for (int k = 0; k < 4; ++k) {
        if (out.value - v[k] <= 1e-12) out.facets.push_back(k);
    }
    return out;
}

NoSignalingReport check_no_signaling(const BehaviorBox& box, double tol) {
    NoSignalingReport r;
    for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) {
            const double m0 = box(x, 0, a, 0) + box(x, 0, a, 1);
            const double m1 = box(x, 1, a, 0) + box(x, 1, a, 1);
            r.alice_residuals[2 * x + a] = std::abs(m0 - m1);
        }
    }
    for (int y = 0; y < 2; ++y) {
        for (int b = 0; b < 2; ++b) {
            const double m0 = box(0, y, 0, b) + box(0, y, 1, b);
            const double m1 = box(1, y, 0, b) + box(1, y, 1, b);
            r.bob_residuals[2 * y + b] = std::abs(m0 - m1);
        }
    }
    const auto worst = [](const std::array<double, 4>& v) { return *std::max_element(v.begin(), v.end()); };
    r.no_signaling = worst(r.alice_residuals) <= tol && worst(r.bob_residuals) <= tol;
    return r;
}

int apply_strategy(int f, int input) {
    switch (f) {
        case 0: return 0;
        case 1: return 1;
        case 2: return input;
        case 3: return 1 - input;
        default: throw ValidationError("local strategy index out of range 0..3: " + std::to_string(f));
    }
}

BehaviorBox deterministic_box(int f_alice, int f_bob) {
    if (f_alice < 0 || f_alice > 3 || f_bob < 0 || f_bob > 3) {
        throw ValidationError("deterministic_box: strategy indices must be in 0..3");
    }
    ProbabilityTable p{};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) p[box_index(x, y, apply_strategy(f_alice, x), apply_strategy(f_bob, y))] = 1.0;
    return BehaviorBox::from_table(p);
}

namespace {

// a xor b = xy xor (alpha x) xor (beta y) xor gamma
BehaviorBox pr_variant(int alpha, int beta, int gamma) {
    ProbabilityTable p{};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if ((a ^ b) == ((x & y) ^ (alpha & x) ^ (beta & y) ^ gamma)) p[box_index(x, y, a, b)] = 0.5;
    return BehaviorBox::from_table(p);
}

}  // namespace

BehaviorBox pr_box() { return pr_variant(0, 0, 0); }

BehaviorBox uniform_box() {
    ProbabilityTable p;
    p.fill(0.25);
    return BehaviorBox::from_table(p);
}

BehaviorBox convex_mix(const BehaviorBox& b1, const BehaviorBox& b2, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw ValidationError("convex_mix: lambda must lie in [0, 1]");
    }
    ProbabilityTable p;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = lambda * b1.table()[i] + (1.0 - lambda) * b2.table()[i];
    return BehaviorBox::from_table(p);
}

BehaviorBox isotropic_box(double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw ValidationError("isotropic_box: visibility must lie in [0, 1]");
    }
    return convex_mix(pr_box(), uniform_box(), visibility);
}

BehaviorBox box_from_correlators(const std::array<double, 4>& e) {
    ProbabilityTable p{};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const double exy = e[2 * x + y];
            if (!(std::abs(exy) <= 1.0)) throw ValidationError("correlator outside [-1, 1]");
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) p[box_index(x, y, a, b)] = (1.0 + ((a ^ b) ? -exy : exy)) / 4.0;
        }
    }
    return BehaviorBox::from_table(p);
}

BehaviorBox tsirelson_box() {
    const double e = 1.0 / std::sqrt(2.0);
    return box_from_correlators({e, e, e, -e});
}

LocalityReport is_local_facets(const BehaviorBox& box) {
    if (!check_no_signaling(box).no_signaling) {
        throw DomainError("facet locality test requires a no-signaling box");
    }
    const auto f = chsh_facet_values(box);
    const auto it = std::max_element(f.begin(), f.end());
    LocalityReport r;
    r.method = LocalityMethod::facets;
    r.max_facet_value = *it;
    r.is_local = r.max_facet_value <= 2.0 + kFacetSlack;
    if (!r.is_local) r.violated_facet = static_cast<int>(it - f.begin());
    return r;
}

LocalityReport is_local_lp(const BehaviorBox& box) {
    // Variables: w[0..15], t, s_plus[0..15], s_minus[0..15].
    //   D w - t + s_plus = p,   D w + t - s_minus = p,   sum w = 1;   minimise t.
    constexpr std::size_t kW = 16;
    constexpr std::size_t kT = 16;
    constexpr std::size_t kSp = 17;
    constexpr std::size_t kSm = 33;
    lp::Problem prob(33, 49);

    std::array<BehaviorBox, 16> vertices{
        deterministic_box(0, 0), deterministic_box(0, 1), deterministic_box(0, 2), deterministic_box(0, 3),
        deterministic_box(1, 0), deterministic_box(1, 1), deterministic_box(1, 2), deterministic_box(1, 3),
        deterministic_box(2, 0), deterministic_box(2, 1), deterministic_box(2, 2), deterministic_box(2, 3),
        deterministic_box(3, 0), deterministic_box(3, 1), deterministic_box(3, 2), deterministic_box(3, 3)};

    for (std::size_t i = 0; i < 16; ++i) {
        for (std::size_t k = 0; k < kW; ++k) {
            prob.at(i, k) = vertices[k].table()[i];
            prob.at(16 + i, k) = vertices[k].table()[i];
        }
        prob.at(i, kT) = -1.0;
        prob.at(i, kSp + i) = 1.0;
        prob.b[i] = box.table()[i];
        prob.at(16 + i, kT) = 1.0;
        prob.at(16 + i, kSm + i) = -1.0;
        prob.b[16 + i] = box.table()[i];
    }
    for (std::size_t k = 0; k < kW; ++k) prob.at(32, k) = 1.0;
    prob.b[32] = 1.0;
    prob.c[kT] = 1.0;

    const auto sol = lp::solve(prob);
    if (sol.status != lp::Status::optimal) {
        throw NumericError("locality LP did not reach an optimum");
    }

    LocalityReport r;
    r.method = LocalityMethod::lp;
    const auto f = chsh_facet_values(box);
    r.max_facet_value = *std::max_element(f.begin(), f.end());

    std::array<double, 16> w{};
    std::copy_n(sol.x.begin(), 16, w.begin());
    // Measure the achieved reconstruction directly rather than trusting t.
    double err = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < kW; ++k) s += w[k] * vertices[k].table()[i];
        err = std::max(err, std::abs(s - box.table()[i]));
    }
    r.lp_residual = err;
    r.is_local = err <= kLpReconstructionTol;
    if (r.is_local) r.lp_weights = w;
    return r;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BehaviorBox random_uniform_marginal_box(std::mt19937_64& rng) {
    std::array<double, 4> e{};
    for (auto& v : e) v = 2.0 * uniform01(rng) - 1.0;
    return box_from_correlators(e);
}

BehaviorBox random_no_signaling_box(std::mt19937_64& rng) {
    const int count = 1 + static_cast<int>(rng() % 4);
    std::array<int, 4> picks{};
    std::array<double, 4> w{};
    double total = 0.0;
    for (int i = 0; i < count; ++i) {
        picks[i] = static_cast<int>(rng() % 24);
        w[i] = -std::log1p(-uniform01(rng));
        total += w[i];
    }
    ProbabilityTable p{};
    for (int i = 0; i < count; ++i) {
        const int k = picks[i];
        const auto v = k < 16 ? deterministic_box(k / 4, k % 4) : pr_variant((k >> 2) & 1, (k >> 1) & 1, k & 1);
        for (std::size_t e = 0; e < 16; ++e) p[e] += w[i] / total * v.table()[e];
    }
    return BehaviorBox::from_table(p);
}

double max_abs_diff(const BehaviorBox& a, const BehaviorBox& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(a.table()[i] - b.table()[i]));
    return d;
}

bool approx_equal(const BehaviorBox& a, const BehaviorBox& b, double tol) { return max_abs_diff(a, b) <= tol; }

}  // namespace nlbound
