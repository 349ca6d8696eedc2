#pragma once

#include <functional>

#include "../core/agent.hpp"
#include "assumptions.hpp"
#include "single_round.hpp"

namespace menuprobe::learn {

// Invoked after every posted menu with the ids of the still-surviving types;
// simulation tests use it to assert the true type is never eliminated.
using SurvivorObserver = std::function<void(int round, const std::vector<std::string>& surviving_ids)>;

// Halving over sorted envelope minimizers (effective dimension 1, no
// dominant actions). Each round posts a two-item menu of adjacent sorted
// minimizers; the agent's pick reveals on which side of the pair its own
// minimizer lies, because its utility envelope is convex. Types sharing a
// minimizer (within 1e-9) survive to a final round that posts the shared
// point with an announced tie-break rule assigning each of them a distinct
// maximal action. At most ceil(log2 K) + 1 rounds.
IdentifyResult learn_via_menu(const GameInstance& game, AgentOracle& agent,
                              const SurvivorObserver& observer = nullptr);

} // namespace menuprobe::learn
