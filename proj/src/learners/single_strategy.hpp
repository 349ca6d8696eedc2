#pragma once

#include "menu_learner.hpp"

namespace menuprobe::learn {

// Halving with one posted strategy per round (effective dimension 1, no
// dominant actions, no shared breakpoints). Each round counts how many
// surviving types best-respond with each action at t=0; when the most common
// action j* covers more than half the survivors, the round plays the
// leftmost t* where that count falls to floor(K/2) (the count steps by +-1
// across breakpoints, so t* exists), otherwise it plays t=0. The observed
// response eliminates at least floor(K/2) types. At most ceil(log2 K) + 1
// rounds; a count step of 2 or more raises CountJump (the shared-breakpoint
// assumption failed at runtime).
IdentifyResult learn_via_single_strategy(const GameInstance& game, AgentOracle& agent,
                                         const SurvivorObserver& observer = nullptr);

} // namespace menuprobe::learn
