#pragma once

#include "types.hpp"

namespace menuprobe {

// V(x, j) = <v_j, x> + c_j, evaluated in plain double arithmetic.
double utility(const AgentType& type, const Strategy& x, int action);

// Actions within rule-tolerance tau of the maximum utility, ascending.
std::vector<int> maximal_actions(const AgentType& type, const Strategy& x, double tau);

// Utility-maximizing action; within-tau ties resolved by the rule.
int best_response(const AgentType& type, const Strategy& x, const TieBreakRule& rule = {});

struct FiniteChoice {
    int item_index = -1;
    Strategy strategy;
    int action = -1;
    double value = 0.0; // max_j utility at the chosen item
};

// The agent's pick from a finite menu: the item whose best achievable
// utility is largest. Item ties (exact double equality) go to the lowest
// menu index; action ties at the chosen item go to the rule.
FiniteChoice choose_from_finite_menu(const AgentType& type, const std::vector<Strategy>& items,
                                     const TieBreakRule& rule = {});

struct BallChoice {
    Vec t_star; // effective coordinates of the chosen strategy
    Strategy strategy; // same point, ambient coordinates
    int action = -1;
    double value = 0.0;
};

// Joint maximization of (strategy, action) over the ball menu
// {t : |t - center| <= radius}. With effective gradients w_j = A^T v_j and
// intercepts c'_j = <v_j, b> + c_j, action j attains its ball maximum
// <w_j, center> + c'_j + radius*|w_j| at t = center + radius * w_j/|w_j|,
// so the winning action is the argmax of those scores and the chosen point
// follows in closed form (the ball-constrained stationarity condition).
// A winning gradient below 1e-12 returns the center.
BallChoice choose_from_ball_menu(const AgentType& type, const StrategySpace& space, const Vec& center,
                                 double radius);

} // namespace menuprobe
