#pragma once

#include "../core/agent.hpp"
#include "../learners/single_round.hpp"

namespace menuprobe::games {

struct HardnessExample {
    GameInstance game;
    Menu menu; // one leader strategy per (m/2)-subset type
    int special_action = 0; // the action only the matching type plays at its own menu item
};

// The exponential single-strategy lower-bound family: a Stackelberg game
// with m leader actions and n = m+2 follower actions whose types are the
// (m/2)-subsets of [m] plus the empty set (C(m, m/2) + 1 types). Columns
// 0..m-1 pay 1 on their own row and -2/(m-2) elsewhere, column m pays
// -1/N^3 flat, and the last column pays (1/N^2) * v^theta with v^theta
// holding 1 on the subset's coordinates and -N elsewhere (all -N for the
// empty set). The menu posts, for each subset type, the strategy with mass
// 2/m on the subset; the empty-set type feasibly owns no such point and is
// recognized by its response instead.
HardnessExample build_hardness_example(int m, int big_n = 0); // big_n defaults to 10*m

// Posts the hardness menu once. A response with the special action names the
// chosen item's type; any other response names the empty-set type.
learn::IdentifyResult identify_via_hardness_menu(const HardnessExample& hardness, AgentOracle& agent);

// Type ids are "{i,j,...}" with ascending 1-based indices, "{}" for the empty set.
std::string subset_type_id(const std::vector<int>& subset_zero_based);

} // namespace menuprobe::games
