#pragma once

#include <cstdint>

#include "../core/types.hpp"

namespace menuprobe::geom {

// Snapshot of every type's behavior at one effective point: the best action
// and the gap between the best and second-best utilities. A zero margin
// (within tolerance) means the point sits on that type's switching boundary.
struct RegionProbe {
    Vec t;
    std::vector<int> best_actions; // per type
    Vec margins; // per type, >= 0
};

RegionProbe probe_regions(const GameInstance& game, const Vec& t);

struct InteriorPoint {
    Vec t_hat;
    double rho_max = 0.0; // certified radius: every type's best response is constant on the ball
    double min_margin = 0.0;
};

// Rejection-samples strictly feasible points and keeps the one maximizing the
// minimum margin over all types. The returned radius is certified by the
// Lipschitz bound margin / (2 * max_j |w_j|) per type, further capped by the
// distance to the feasible-set boundary, so the ball provably keeps every
// type's best response fixed.
InteriorPoint find_interior_point(const GameInstance& game, int attempts, uint64_t seed);

} // namespace menuprobe::geom
