#pragma once

#include <cstdint>

#include "../core/simulate.hpp"

namespace menuprobe::learn {

// Realizes the action-informed oracle from a known ground-truth type: samples
// feasible strategies until every action has one eliciting it as the best
// response. Harness-side only (the oracle is an assumption, not something a
// learner could build); throws DegenerateInstance when some action is never
// a best response within the probe budget.
std::vector<Strategy> sample_action_strategies(const AgentType& truth, const StrategySpace& space,
                                               long max_probes, uint64_t seed);

} // namespace menuprobe::learn
