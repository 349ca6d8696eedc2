#include "regions.hpp"

#include <cmath>
#include <limits>

#include "../core/simulate.hpp"
#include "../error.hpp"
#include "../rng.hpp"

namespace menuprobe::geom {

RegionProbe probe_regions(const GameInstance& game, const Vec& t) {
    if (!game.space().contains(t)) raise(ErrorCode::InfeasiblePoint, "probe_regions: infeasible point");
    const Strategy x = game.space().embed(t);
    RegionProbe p;
    p.t = t;
    for (const auto& type : game.types()) {
        double best = -std::numeric_limits<double>::infinity();
        double second = -std::numeric_limits<double>::infinity();
        int best_j = -1;
        for (int j = 0; j < type.actions(); ++j) {
            const double u = utility(type, x, j);
            if (u > best) {
                second = best;
                best = u;
                best_j = j;
            } else if (u > second) {
                second = u;
            }
        }
        p.best_actions.push_back(best_j);
        p.margins.push_back(std::max(0.0, best - second));
    }
    return p;
}

InteriorPoint find_interior_point(const GameInstance& game, int attempts, uint64_t seed) {
    const StrategySpace& space = game.space();
    if (space.effective_dim() < 2)
        raise(ErrorCode::DimensionMismatch, "find_interior_point: requires effective dimension >= 2");

    const int n = game.num_actions();
    const int kk = game.num_types();

    // Per-type effective lines, flattened: w[type][action] and intercepts.
    std::vector<std::vector<Vec>> w(kk, std::vector<Vec>(n));
    std::vector<Vec> b(kk, Vec(n, 0.0));
    Vec max_grad(kk, 0.0);
    for (int k = 0; k < kk; ++k) {
        const AgentType& type = game.types()[k];
        for (int j = 0; j < n; ++j) {
            w[k][j] = space.effective_gradient(type.directions[j]);
            b[k][j] = space.effective_intercept(type.directions[j], type.intercepts[j]);
            max_grad[k] = std::max(max_grad[k], norm2(w[k][j]));
        }
    }

    auto rng = make_rng(seed);
    double best_min_margin = 0.0;
    Vec best_t;
    double best_rho = 0.0;
    for (int a = 0; a < attempts; ++a) {
        Vec t = space.sample(rng);
        const double bd = space.boundary_distance(t);
        if (bd <= 1e-9) continue;
        double min_margin = std::numeric_limits<double>::infinity();
        double rho = bd;
        for (int k = 0; k < kk && min_margin > best_min_margin; ++k) {
            double top = -std::numeric_limits<double>::infinity();
            double second = -std::numeric_limits<double>::infinity();
            for (int j = 0; j < n; ++j) {
                const double u = dot(w[k][j], t) + b[k][j];
                if (u > top) {
                    second = top;
                    top = u;
                } else if (u > second) {
                    second = u;
                }
            }
            const double margin = top - second;
            min_margin = std::min(min_margin, margin);
            if (max_grad[k] > 0.0) rho = std::min(rho, margin / (2.0 * max_grad[k]));
        }
        if (min_margin > best_min_margin) {
            best_min_margin = min_margin;
            best_t = std::move(t);
            best_rho = rho;
        }
    }
    if (best_t.empty() || best_rho <= 0.0)
        raise(ErrorCode::DegenerateInstance,
              "find_interior_point: no strictly feasible positive-margin point found");
    return InteriorPoint{std::move(best_t), best_rho, best_min_margin};
}

} // namespace menuprobe::geom
