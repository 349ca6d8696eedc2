#pragma once

#include <cstdint>

#include "../core/agent.hpp"
#include "assumptions.hpp"

namespace menuprobe::learn {

struct IdentifyResult {
    std::string type_id;
    Transcript transcript;
    AssumptionReport assumptions;
};

// Identifies the agent's type with one ball menu. Requires effective
// dimension >= 2 and non-parallel gradients. Finds an interior point where
// every candidate type's best response is locally constant, posts the ball
// of half the certified radius, and matches the observed choice against each
// surviving candidate's predicted choice t_hat + rho * w_j / |w_j| (the
// stationary point of the ball-constrained utility maximization). Candidates
// whose best response at the center differs from the observed action are
// excluded before matching. Exactly one round.
IdentifyResult single_round_identify(const GameInstance& game, AgentOracle& agent, uint64_t seed);

} // namespace menuprobe::learn
