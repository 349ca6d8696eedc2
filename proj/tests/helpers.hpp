#pragma once

#include <random>

#include "core/agent.hpp"
#include "core/simulate.hpp"
#include "rng.hpp"

namespace testutil {

using namespace menuprobe;

inline AgentType random_type(int n, int m, std::mt19937_64& rng, const std::string& id = "t") {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    AgentType t;
    t.id = id;
    for (int j = 0; j < n; ++j) {
        Vec v(m);
        for (double& x : v) x = unif(rng);
        t.directions.push_back(std::move(v));
        t.intercepts.push_back(unif(rng));
    }
    return t;
}

// Type whose utility lines are tangent to the paraboloid |x|^2/2 at random
// anchor points: action j is the unique best response near its own anchor
// (the regions are the anchors' Voronoi cells), so every action is realizable
// and the action-informed oracle always exists.
inline AgentType voronoi_type(int n, int m, std::mt19937_64& rng, const std::string& id = "vor") {
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    AgentType t;
    t.id = id;
    for (int j = 0; j < n; ++j) {
        Vec z(m);
        for (double& x : z) x = unif(rng);
        t.intercepts.push_back(-0.5 * dot(z, z));
        t.directions.push_back(std::move(z));
    }
    return t;
}

// Exhaustive argmax over actions; the reference for best_response.
inline int brute_force_best_action(const AgentType& t, const Strategy& x) {
    int best = 0;
    double bu = utility(t, x, 0);
    for (int j = 1; j < t.actions(); ++j) {
        const double u = utility(t, x, j);
        if (u > bu) {
            bu = u;
            best = j;
        }
    }
    return best;
}

// Exhaustive max over (item, action) pairs; the reference for finite menus.
inline double brute_force_menu_value(const AgentType& t, const std::vector<Strategy>& items) {
    double best = -1e300;
    for (const auto& it : items)
        for (int j = 0; j < t.actions(); ++j) best = std::max(best, utility(t, it, j));
    return best;
}

} // namespace testutil
