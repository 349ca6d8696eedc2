#include "infinite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "../error.hpp"
#include "../geometry/bisect.hpp"
#include "../rng.hpp"

namespace menuprobe::learn {

OracleStrategies OracleStrategies::validated(AgentOracle& agent, std::vector<Strategy> per_action,
                                             int* probes_used) {
    int probes = 0;
    for (size_t j = 0; j < per_action.size(); ++j) {
        const int resp = agent.respond(per_action[j]);
        ++probes;
        if (resp != static_cast<int>(j))
            raise(ErrorCode::InvalidArgument,
                  "OracleStrategies: strategy " + std::to_string(j) + " elicits action " +
                      std::to_string(resp));
    }
    if (probes_used) *probes_used = probes;
    return OracleStrategies(std::move(per_action));
}

bool ReconstructedType::complete() const {
    for (const auto& a : actions)
        if (!a.resolved) return false;
    return true;
}

AgentType ReconstructedType::to_agent_type(const std::string& id) const {
    if (!complete()) raise(ErrorCode::PartialResult, "ReconstructedType: unresolved actions remain");
    AgentType t;
    t.id = id;
    for (const auto& a : actions) {
        t.directions.push_back(scale(a.direction, a.scale));
        t.intercepts.push_back(a.intercept);
    }
    return t;
}

namespace {

struct RegionAnchor {
    Strategy point; // certified: the agent responds with the region's action here
    double jitter = 0.0; // safe perturbation radius when sampling bisection endpoints
};

Vec clamp_to_box(Vec x, const StrategySpace& space) {
    for (size_t i = 0; i < x.size(); ++i)
        x[i] = std::min(std::max(x[i], space.box_lo()[i]), space.box_hi()[i]);
    return x;
}

Strategy jittered(const RegionAnchor& anchor, const StrategySpace& space, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double radius = anchor.jitter;
    for (int attempt = 0; attempt < 8; ++attempt, radius *= 0.5) {
        Vec delta(anchor.point.coords.size());
        for (double& v : delta) v = gauss(rng);
        const double dn = norm2(delta);
        if (dn < 1e-12) continue;
        const double r = radius * std::pow(unif(rng), 1.0 / static_cast<double>(delta.size()));
        Vec cand = clamp_to_box(axpy(anchor.point.coords, r / dn, delta), space);
        if (space.contains(cand)) return Strategy{std::move(cand)};
    }
    return anchor.point;
}

} // namespace

ReconstructionResult learn_infinite_type(AgentOracle& agent, const OracleStrategies& oracle_strats,
                                         const StrategySpace& space, int precision_bits, uint64_t seed) {
    if (space.effective_dim() < 2 || !space.is_identity_chart())
        raise(ErrorCode::DimensionMismatch,
              "learn_infinite_type: requires an identity chart of dimension >= 2");
    const int n = oracle_strats.actions();
    if (n < 2) raise(ErrorCode::InvalidArgument, "learn_infinite_type: need at least 2 actions");

    ReconstructionResult out;
    out.reconstruction.actions.resize(n);
    out.reconstruction.reference_action = 0;
    out.reconstruction.precision_bits = precision_bits;

    RecordingOracle recorder(agent, out.transcript);
    auto rng = make_rng(seed);
    const double diam = space.diameter();
    const Vec box_center = space.center();

    // Phase 1: unit directions. A ball menu answered with action j pins the
    // direction exactly: the chosen point maximizes <v_j, x> over the ball,
    // so (x* - center)/radius = v_j / |v_j|.
    std::vector<RegionAnchor> anchors(n);
    for (int j = 0; j < n; ++j) {
        Vec c = oracle_strats.at(j).coords;
        // Centers too close to the boundary admit no interior ball; pull
        // toward the box center with shrinking steps until the response at
        // the pulled point is still j.
        if (space.boundary_distance(c) < 1e-6 * diam) {
            bool placed = false;
            double eta = 0.05;
            for (int k = 0; k < 64 && !placed; ++k, eta *= 0.5) {
                Vec cand = axpy(c, eta, sub(box_center, c));
                if (space.boundary_distance(cand) < 1e-9) continue;
                if (recorder.respond(Strategy{cand}) == j) {
                    c = std::move(cand);
                    placed = true;
                }
            }
            if (!placed)
                raise(ErrorCode::RegionNotInterior,
                      "learn_infinite_type: oracle strategy for action " + std::to_string(j) +
                          " has no interior neighborhood responding with it");
        }
        double rho = std::min(0.1 * diam, 0.9 * space.boundary_distance(c));
        bool done = false;
        for (int k = 0; k < 64 && !done; ++k, rho *= 0.5) {
            if (rho < 1e-14) break;
            const BallChoice bc = recorder.choose_ball(c, rho);
            if (bc.action != j) continue;
            Vec dir = scale(sub(bc.t_star, c), 1.0 / rho);
            const double dn = norm2(dir);
            if (dn < 1e-9)
                raise(ErrorCode::DegenerateInstance,
                      "learn_infinite_type: zero utility gradient for action " + std::to_string(j));
            out.reconstruction.actions[j].direction = scale(dir, 1.0 / dn);
            anchors[j] = RegionAnchor{Strategy{bc.t_star}, rho / 2.0};
            done = true;
        }
        if (!done)
            raise(ErrorCode::RegionNotInterior,
                  "learn_infinite_type: ball shrinking exhausted for action " + std::to_string(j) +
                      " (strategy not interior to its best-response region)");
    }

    // Phase 2: scales and intercepts, gauge lambda_0 = 1, c_0 = 0.
    out.reconstruction.actions[0].scale = 1.0;
    out.reconstruction.actions[0].intercept = 0.0;
    out.reconstruction.actions[0].resolved = true;

    std::map<std::pair<int, int>, std::vector<Vec>> boundary_points;
    std::set<std::pair<int, int>> attempted;
    std::vector<int> resolution_order = {0};

    auto try_solve = [&]() -> bool {
        bool progress = false;
        for (auto& [pair, points] : boundary_points) {
            if (points.size() < 4) continue;
            auto& lhs = out.reconstruction.actions[pair.first];
            auto& rhs = out.reconstruction.actions[pair.second];
            if (lhs.resolved == rhs.resolved) continue;
            auto& known = lhs.resolved ? lhs : rhs;
            auto& unknown = lhs.resolved ? rhs : lhs;
            const int unknown_action = lhs.resolved ? pair.second : pair.first;
            try {
                const auto sol = geom::solve_link(known.scale, known.intercept, known.direction,
                                                  unknown.direction, points);
                unknown.scale = sol.scale;
                unknown.intercept = sol.intercept;
                unknown.resolved = true;
                resolution_order.push_back(unknown_action);
                progress = true;
            } catch (const Error&) {
                // Degenerate spread or nonpositive scale: leave for another path.
            }
        }
        return progress;
    };

    while (true) {
        if (out.reconstruction.complete()) break;
        // Next frontier pair in BFS order: resolved regions in the order they
        // were resolved, against unresolved actions ascending.
        int from = -1, to = -1;
        for (int r : resolution_order) {
            for (int u = 0; u < n && to < 0; ++u) {
                if (out.reconstruction.actions[u].resolved) continue;
                if (attempted.count({std::min(r, u), std::max(r, u)})) continue;
                from = r;
                to = u;
            }
            if (to >= 0) break;
        }
        if (to < 0) break; // exhausted all pairs: partial result
        attempted.insert({std::min(from, to), std::max(from, to)});

        // 4 boundary points from bisections of independently jittered
        // segments. A bisection may surface a different adjacent pair (third
        // actions replace the bracket); its points still count for that pair.
        for (int rep = 0; rep < 4; ++rep) {
            Strategy a = jittered(anchors[from], space, rng);
            Strategy b = jittered(anchors[to], space, rng);
            try {
                const auto res = geom::bisect_hyperplane(recorder, a, b, precision_bits);
                const auto key = std::make_pair(std::min(res.lo_action, res.hi_action),
                                                std::max(res.lo_action, res.hi_action));
                boundary_points[key].push_back(res.point.coords);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EqualResponses) throw;
                // Jitter pushed both endpoints into one region; try the
                // unjittered anchors once.
                try {
                    const auto res = geom::bisect_hyperplane(recorder, anchors[from].point,
                                                             anchors[to].point, precision_bits);
                    const auto key = std::make_pair(std::min(res.lo_action, res.hi_action),
                                                    std::max(res.lo_action, res.hi_action));
                    boundary_points[key].push_back(res.point.coords);
                } catch (const Error& e2) {
                    if (e2.code() != ErrorCode::EqualResponses) throw;
                }
            }
        }
        while (try_solve()) {
        }
    }

    return out;
}

} // namespace menuprobe::learn
