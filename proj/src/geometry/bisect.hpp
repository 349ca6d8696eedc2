#pragma once

#include "../core/agent.hpp"

namespace menuprobe::geom {

struct BisectResult {
    Strategy point; // midpoint of the final bracket, within 2^-L of the boundary
    int lo_action = -1;
    int hi_action = -1;
    Strategy lo_point; // final bracket endpoints, certified responses above
    Strategy hi_point;
    int queries = 0;
};

// Binary search along the segment [a, b] for a point on the boundary between
// two best-response regions. The bracket endpoints always elicit distinct
// actions; if a third action shows up at a midpoint the bracket collapses
// onto the (lo_action, third) sub-segment, so the reported boundary may
// separate a newly discovered region. Stops once the bracket's parametric
// length reaches 2^-precision_bits. Queries: endpoints (unless both actions
// are passed in) plus at most precision_bits midpoints.
BisectResult bisect_hyperplane(AgentOracle& agent, const Strategy& a, const Strategy& b,
                               int precision_bits);
BisectResult bisect_hyperplane(AgentOracle& agent, const Strategy& a, const Strategy& b,
                               int precision_bits, int known_action_a, int known_action_b);

struct LinkSolution {
    double scale = 0.0; // lambda_{j'}
    double intercept = 0.0; // c_{j'}
    double residual = 0.0; // max least-squares residual over the points
};

// Given action j's resolved utility line (scale lambda_j, intercept c_j,
// unit direction dir_j) and >= 2 points on the boundary shared with action
// j', recovers (lambda_{j'}, c_{j'}) from the utility-equality equations
// d_k = lambda_{j'} <dir_{j'}, x_k> + c_{j'} with d_k = lambda_j <dir_j, x_k> + c_j,
// solved by least squares. Requires the points' projections onto dir_{j'}
// to spread by more than 1e-6 and the solved scale to be positive.
LinkSolution solve_link(double scale_j, double intercept_j, const Vec& dir_j, const Vec& dir_jp,
                        const std::vector<Vec>& points);

} // namespace menuprobe::geom
