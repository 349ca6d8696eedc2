#include "equivalence.hpp"

#include <limits>

#include "../error.hpp"
#include "../rng.hpp"

namespace menuprobe::learn {

EquivalenceResult behaviorally_equivalent(const AgentType& a, const AgentType& b,
                                          const StrategySpace& space, long probes, double margin_floor,
                                          uint64_t seed) {
    if (a.actions() != b.actions() || a.ambient_dim() != b.ambient_dim())
        raise(ErrorCode::DimensionMismatch, "behaviorally_equivalent: shape mismatch");
    auto rng = make_rng(seed);
    EquivalenceResult r;
    long disagreements = 0;
    for (long p = 0; p < probes; ++p) {
        const Strategy x = space.embed(space.sample(rng));
        double top = -std::numeric_limits<double>::infinity();
        double second = top;
        int best_b = -1;
        for (int j = 0; j < b.actions(); ++j) {
            const double u = dot(b.directions[j], x.coords) + b.intercepts[j];
            if (u > top) {
                second = top;
                top = u;
                best_b = j;
            } else if (u > second) {
                second = u;
            }
        }
        if (top - second < margin_floor) {
            ++r.skipped;
            continue;
        }
        ++r.compared;
        if (best_response(a, x) != best_b) ++disagreements;
    }
    r.disagreement_rate = r.compared > 0 ? static_cast<double>(disagreements) / r.compared : 0.0;
    r.equivalent = disagreements == 0;
    return r;
}

EquivalenceResult behaviorally_equivalent(const ReconstructedType& a, const AgentType& b,
                                          const StrategySpace& space, long probes, double margin_floor,
                                          uint64_t seed) {
    return behaviorally_equivalent(a.to_agent_type("reconstruction"), b, space, probes, margin_floor, seed);
}

} // namespace menuprobe::learn
