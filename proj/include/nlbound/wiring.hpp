#pragma once

// Sequential (memoryless) wiring of boxes: the outputs (a', b') of one stage
// are the only inputs of the next. Wirings that also forward the original
// (x, y) can distill non-locality and are not modelled here.

#include <vector>

#include "nlbound/box.hpp"

namespace nlbound {

inline constexpr double kBoxEqualityTol = 1e-9;

class WiringChain {
public:
    /// Throws ValidationError on an empty stage list.
    explicit WiringChain(std::vector<BehaviorBox> stages);
    const std::vector<BehaviorBox>& stages() const noexcept { return stages_; }

private:
    std::vector<BehaviorBox> stages_;
};

/// p(x,y,a,b) = sum_{a',b'} p1(x,y,a',b') p2(a',b',a,b)
BehaviorBox sequential_compose(const BehaviorBox& first, const BehaviorBox& second);

BehaviorBox compose_chain(const WiringChain& chain);

enum class StagePosition { first, second };

struct AuditEntry {
    int f_alice = 0;
    int f_bob = 0;
    double chsh_max = 0.0;
    bool counterexample = false;
};

struct AbsorptionReport {
    StagePosition position = StagePosition::first;
    std::vector<AuditEntry> results;         // all 16 strategies, sorted by 4 fA + fB
    std::vector<AuditEntry> counterexamples;  // chsh_max > 2 + 1e-9
};

/// Wires `box` with each deterministic local box, the local one placed at
/// `position`, and reports every composition whose CHSH value exceeds the
/// local bound. A local stage that merely passes inputs through leaves the
/// other stage intact, so counterexamples are expected for non-local boxes.
AbsorptionReport absorption_audit(const BehaviorBox& box, StagePosition position);

/// Whether compose(x, y) == compose(x, z) implies y == z for this triple
/// (both comparisons within 1e-9).
bool cancellativity_probe(const BehaviorBox& bx, const BehaviorBox& by, const BehaviorBox& bz);

}  // namespace nlbound
