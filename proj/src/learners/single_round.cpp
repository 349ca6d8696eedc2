#include "single_round.hpp"

#include <cmath>
#include <limits>

#include "../error.hpp"
#include "../geometry/regions.hpp"

namespace menuprobe::learn {

IdentifyResult single_round_identify(const GameInstance& game, AgentOracle& agent, uint64_t seed) {
    const StrategySpace& space = game.space();
    if (space.effective_dim() < 2)
        raise(ErrorCode::DimensionMismatch,
              "single_round_identify: requires effective dimension >= 2 (no single-round menu exists in 1-D)");

    IdentifyResult out;
    out.assumptions = check_assumption_nonparallel(game);
    if (!out.assumptions.all_ok())
        raise(ErrorCode::AssumptionViolated,
              "single_round_identify: non-parallel gradient assumption fails: " +
                  out.assumptions.violations.front().detail);

    const auto interior = geom::find_interior_point(game, 512, seed);
    const double rho = interior.rho_max / 2.0;

    RecordingOracle recorder(agent, out.transcript);
    const BallChoice observed = recorder.choose_ball(interior.t_hat, rho);

    const Strategy center = space.embed(interior.t_hat);
    const double tol = 10.0 * kDefaultTieTol;
    int matched = -1;
    double matched_dist = std::numeric_limits<double>::infinity();
    int close_matches = 0;
    for (int k = 0; k < game.num_types(); ++k) {
        const AgentType& type = game.types()[k];
        // Exclude candidates whose best response at the center is not the
        // observed action; margins are positive on the whole ball.
        if (best_response(type, center) != observed.action) continue;
        Vec w = space.effective_gradient(type.directions[observed.action]);
        const double wn = norm2(w);
        const Vec predicted = wn < 1e-12 ? interior.t_hat : axpy(interior.t_hat, rho / wn, w);
        const double dist = dist2(predicted, observed.t_star);
        if (dist <= tol) {
            ++close_matches;
            if (dist < matched_dist) {
                matched_dist = dist;
                matched = k;
            }
        }
    }
    if (close_matches == 0)
        raise(ErrorCode::NoMatch, "single_round_identify: observed choice matches no candidate type");
    if (close_matches > 1)
        raise(ErrorCode::AmbiguousMatch,
              "single_round_identify: two candidate predictions within tolerance (near-parallel gradients)");
    out.type_id = game.types()[matched].id;
    return out;
}

} // namespace menuprobe::learn
