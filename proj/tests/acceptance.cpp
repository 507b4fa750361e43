// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nlbound/box.hpp"
#include "nlbound/deform.hpp"
#include "nlbound/semiring.hpp"
#include "nlbound/wiring.hpp"
#include "oracles.hpp"

using namespace nlbound;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome xmax_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    DeformationParams p;
    p.T = 1.0;
    p.target = 4.0;
    const auto r = solve_xmax(p);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = std::abs(r.x_max - 2.82355) <= 1e-4 && std::abs(r.gap_to_tsirelson - 0.0017) <= 0.0002 && secs < 1.0;
    return {ok, fmt("x_max=%.10f gap=%.7f time=%.3fs", r.x_max, r.gap_to_tsirelson, secs)};
}

Outcome chsh_landmarks() {
    const double pr = chsh_canonical(pr_box());
    const double ts = chsh_canonical(tsirelson_box());
    const double err = std::abs(ts - 2.0 * std::sqrt(2.0));
    return {pr == 4.0 && err <= 1e-12, fmt("pr=%.17g tsirelson=%.17g |err|=%.2e", pr, ts, err)};
}

Outcome local_polytope() {
    double vmax = 0.0;
    int disagreements = 0;
    auto compare = [&](const BehaviorBox& b) {
        if (is_local_facets(b).is_local != is_local_lp(b).is_local) ++disagreements;
    };
    for (int fa = 0; fa < 4; ++fa)
        for (int fb = 0; fb < 4; ++fb) {
            const auto d = deterministic_box(fa, fb);
            vmax = std::max(vmax, chsh_max(d).value);
            compare(d);
        }
    compare(pr_box());
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) compare(random_uniform_marginal_box(rng));
    return {vmax == 2.0 && disagreements == 0, fmt("vertex max=%.17g disagreements=%.0f of 1017", vmax, disagreements)};
}

Outcome quadrature_oracle() {
    const std::vector<double> grid{2.0, 2.5, 3.0, 3.5, 4.0};
    std::vector<std::array<double, 2>> pairs;
    for (double y : grid)
        for (double x : grid) pairs.push_back({y, x});
    const auto ref = oracle::midpoint_Z_many(pairs, 1.0, 10000000);
    double worst = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        worst = std::max(worst, std::abs(combined_chsh(pairs[i][0], pairs[i][1]).Z - ref[i]));
    }
    return {worst <= 1e-6, fmt("max |GL - midpoint(1e7)| = %.3e over 25 pairs", worst)};
}

Outcome round_trip() {
    double worst = 0.0;
    for (double x : {2.2, 2.8, 3.5}) {
        DeformationParams p;
        p.target = combined_chsh(2.0, x).Z;
        worst = std::max(worst, std::abs(solve_xmax(p).x_max - x));
    }
    return {worst <= 1e-7, fmt("max |x_recovered - x| = %.3e", worst)};
}

Outcome wiring_algebra() {
    const auto id = deterministic_box(2, 2);
    double identity_err = 0.0, norm_err = 0.0;
    int ns_failures = 0;
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 1000; ++i) {
        const auto a = i % 2 ? random_no_signaling_box(rng) : random_uniform_marginal_box(rng);
        const auto b = random_uniform_marginal_box(rng);
        identity_err = std::max({identity_err, max_abs_diff(sequential_compose(id, a), a),
                                 max_abs_diff(sequential_compose(a, id), a)});
        const auto ab = sequential_compose(a, b);
        for (int blk = 0; blk < 4; ++blk) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += ab.table()[4 * blk + k];
            norm_err = std::max(norm_err, std::abs(s - 1.0));
        }
        if (!check_no_signaling(ab).no_signaling) ++ns_failures;
    }
    // Correlators of pr . pr against the explicit double sum.
    const auto e = correlators(sequential_compose(pr_box(), pr_box()));
    const auto e_ref = oracle::correlators(oracle::compose(pr_box().table(), pr_box().table()));
    const std::array<double, 4> expected{0, 0, 0, 1};
    double pr_err = 0.0;
    for (int k = 0; k < 4; ++k) pr_err = std::max({pr_err, std::abs(e.e[k] - expected[k]), std::abs(e_ref[k] - expected[k])});
    const bool ok = identity_err <= 1e-12 && norm_err <= 1e-12 && ns_failures == 0 && pr_err <= 1e-12;
    return {ok, fmt("identity err=%.2e norm err=%.2e pr.pr err=%.2e", identity_err, norm_err, pr_err) +
                    " no-signaling failures=" + std::to_string(ns_failures)};
}

Outcome absorption_audit_pr() {
    const auto report = absorption_audit(pr_box(), StagePosition::first);
    bool identity_counterexample = false;
    double constant_max = 0.0;
    for (const auto& e : report.results) {
        if (e.f_alice == 2 && e.f_bob == 2) identity_counterexample = e.counterexample && e.chsh_max == 4.0;
        if (e.f_alice < 2 || e.f_bob < 2) constant_max = std::max(constant_max, e.chsh_max);
    }
    return {identity_counterexample && constant_max <= 2.0 + 1e-9,
            fmt("identity counterexample=%.0f constant-component max=%.17g counterexamples=%.0f",
                identity_counterexample, constant_max, static_cast<double>(report.counterexamples.size()))};
}

Outcome semiring_axioms() {
    constexpr int kCases = 10000;
    std::mt19937_64 rng(8);
    auto u = [&](double lo, double hi) { return lo + (hi - lo) * uniform01(rng); };
    auto label = [&] {
        const auto k = static_cast<int>(rng() % 66);
        return k == 65 ? ModelLabel::bottom() : ModelLabel::of(2.0 + k / 32.0);
    };
    int failures = 0;
    for (int i = 0; i < kCases; ++i) {
        const auto a = label(), b = label(), c = label();
        failures += !(a + b == b + a) + !((a + b) + c == a + (b + c)) + !(a + a == a) + !(a + ModelLabel::bottom() == a);
    }
    for (int i = 0; i < kCases; ++i) {
        const auto x1 = label(), x2 = label();
        for (int l1 = 0; l1 < 2; ++l1) {
            for (int l2 = 0; l2 < 2; ++l2)
                failures += !(scalar_act(boolean_add(l1, l2), x1) == scalar_act(l1, x1) + scalar_act(l2, x1));
            failures += !(scalar_act(l1, x1 + x2) == scalar_act(l1, x1) + scalar_act(l1, x2));
        }
        failures += !(scalar_act(1, x1) == x1) + !(scalar_act(0, x1).is_bottom());
    }
    for (int i = 0; i < kCases; ++i) {
        const TropicalValue a(u(0, 10)), b(u(0, 10)), c(u(0, 10));
        failures += !(trop_add(a, b) == trop_add(b, a)) + !(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
        failures += !(trop_add(a, a) == a) + !(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
        failures += !(trop_mul(a, b) == trop_mul(b, a)) + !(trop_mul(a, TropicalValue::one()) == a);
        const double l = trop_mul(trop_mul(a, b), c).value(), r = trop_mul(a, trop_mul(b, c)).value();
        failures += !(std::abs(l - r) <= 1e-12 * std::max(1.0, l));
        if (a.value() > 0) failures += !(std::abs(trop_mul(a, trop_inv(a)).value() - 1.0) <= 1e-15);
    }
    for (int i = 0; i < kCases; ++i) {
        const auto l = lift(ModelLabel::of(u(2, 4)));
        const double al = u(-3, 3), be = u(-3, 3);
        const double lhs = power(power(l, al), be).value(), rhs = power(l, al * be).value();
        failures += !(std::abs(lhs - rhs) <= 1e-12 * rhs);
        const int n = 1 + static_cast<int>(rng() % 12);
        failures += !(std::abs(std::pow(power(l, 1.0 / n).value(), n) - l.value()) <= 1e-12 * l.value());
    }
    return {failures == 0, fmt("4 suites x %.0f cases, failures=%.0f", kCases, failures)};
}

Outcome idempotent_layer() {
    const double sup = idempotent_combined_chsh(2.0, 2.0, 1.0);
    const double z = combined_chsh(2.0, 2.0).Z;
    return {std::abs(sup - 4.0) <= 1e-9 && z < 4.0, fmt("sup=%.15f Z(2,2)=%.15f", sup, z)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 X_max reproduction", xmax_reproduction},
        {"2 CHSH landmarks", chsh_landmarks},
        {"3 local polytope", local_polytope},
        {"4 quadrature oracle", quadrature_oracle},
        {"5 monotone root solve", round_trip},
        {"6 wiring algebra", wiring_algebra},
        {"7 absorption audit", absorption_audit_pr},
        {"8 semiring axioms", semiring_axioms},
        {"9 idempotent layer", idempotent_layer},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o{false, ""};
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
