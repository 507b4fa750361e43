#include "nlbound/wiring.hpp"

#include "nlbound/errors.hpp"

namespace nlbound {

WiringChain::WiringChain(std::vector<BehaviorBox> stages) : stages_(std::move(stages)) {
    if (stages_.empty()) throw ValidationError("wiring chain needs at least one stage");
}

BehaviorBox sequential_compose(const BehaviorBox& first, const BehaviorBox& second) {
    ProbabilityTable p{};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    double s = 0.0;
                    for (int a1 = 0; a1 < 2; ++a1)
                        for (int b1 = 0; b1 < 2; ++b1) s += first(x, y, a1, b1) * second(a1, b1, a, b);
                    p[box_index(x, y, a, b)] = s;
                }
    return BehaviorBox::from_table(p);
}

BehaviorBox compose_chain(const WiringChain& chain) {
    const auto& st = chain.stages();
    BehaviorBox acc = st.front();
    for (std::size_t i = 1; i < st.size(); ++i) acc = sequential_compose(acc, st[i]);
    return acc;
}

AbsorptionReport absorption_audit(const BehaviorBox& box, StagePosition position) {
    AbsorptionReport report;
    report.position = position;
    report.results.reserve(16);
    for (int fa = 0; fa < 4; ++fa) {
        for (int fb = 0; fb < 4; ++fb) {
            const auto local = deterministic_box(fa, fb);
            const auto composed =
                position == StagePosition::first ? sequential_compose(local, box) : sequential_compose(box, local);
            AuditEntry e{fa, fb, chsh_max(composed).value, false};
            e.counterexample = e.chsh_max > 2.0 + kFacetSlack;
            report.results.push_back(e);
            if (e.counterexample) report.counterexamples.push_back(e);
        }
    }
    return report;
}

bool cancellativity_probe(const BehaviorBox& bx, const BehaviorBox& by, const BehaviorBox& bz) {
    const bool products_equal = approx_equal(sequential_compose(bx, by), sequential_compose(bx, bz), kBoxEqualityTol);
    return !products_equal || approx_equal(by, bz, kBoxEqualityTol);
}

}  // namespace nlbound
