#pragma once

#include <cstdint>

#include "infinite.hpp"

namespace menuprobe::learn {

struct EquivalenceResult {
    bool equivalent = false;
    double disagreement_rate = 0.0;
    long compared = 0;
    long skipped = 0;
};

// Samples uniform feasible strategies and compares best responses of a and b.
// Probes where b's top-two utility gap falls below margin_floor are skipped
// (both argmaxes are tie-noise there). Equivalent iff zero disagreements
// among the compared probes.
EquivalenceResult behaviorally_equivalent(const AgentType& a, const AgentType& b,
                                          const StrategySpace& space, long probes, double margin_floor,
                                          uint64_t seed);
EquivalenceResult behaviorally_equivalent(const ReconstructedType& a, const AgentType& b,
                                          const StrategySpace& space, long probes, double margin_floor,
                                          uint64_t seed);

} // namespace menuprobe::learn
