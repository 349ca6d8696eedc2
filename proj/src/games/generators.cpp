#include "generators.hpp"

#include <cmath>

#include <json.hpp>

#include "../error.hpp"
#include "../geometry/envelope.hpp"
#include "../rng.hpp"

namespace menuprobe::games {

namespace {

std::string type_id(int k) { return "theta_" + std::to_string(k); }

Vec dirichlet_uniform(int dim, std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    Vec p(dim);
    double sum = 0.0;
    for (double& v : p) {
        v = expo(rng);
        sum += v;
    }
    for (double& v : p) v /= sum;
    return p;
}

} // namespace

GameInstance gen_stackelberg(int m, int n, int big_k, uint64_t seed) {
    if (m < 2 || n < 2 || big_k < 1) raise(ErrorCode::InvalidArgument, "gen_stackelberg: need m,n >= 2, K >= 1");
    auto rng = make_rng(mix_seed(seed, 0x57ac));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    std::vector<AgentType> types;
    for (int k = 0; k < big_k; ++k) {
        AgentType t;
        t.id = type_id(k);
        t.directions.assign(n, Vec(m, 0.0));
        t.intercepts.assign(n, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) t.directions[j][i] = unif(rng); // F^theta[i, j]
        types.push_back(std::move(t));
    }
    std::vector<Vec> leader(m, Vec(n, 0.0));
    for (auto& row : leader)
        for (double& v : row) v = unif(rng);
    nlohmann::json meta{{"leader_matrix", leader}};
    return GameInstance(StrategySpace::simplex(m), std::move(types), GameClass::Stackelberg, std::move(meta));
}

SecurityGame gen_security(int n, int r, int big_k, uint64_t seed, Vec slice_direction) {
    if (n < 2 || r < 1 || r >= n) raise(ErrorCode::InvalidArgument, "gen_security: need 1 <= r < n, n >= 2");
    if (big_k < 1) raise(ErrorCode::InvalidArgument, "gen_security: need K >= 1");
    if (slice_direction.empty()) slice_direction.assign(n, 1.0);
    if (static_cast<int>(slice_direction.size()) != n)
        raise(ErrorCode::DimensionMismatch, "gen_security: slice_direction must have length n");
    double dir_sum = 0.0, dir_max = 0.0;
    for (double v : slice_direction) {
        if (v < 0.0) raise(ErrorCode::InvalidArgument, "gen_security: slice_direction must be nonnegative");
        dir_sum += v;
        dir_max = std::max(dir_max, v);
    }
    if (dir_max <= 0.0) raise(ErrorCode::InvalidArgument, "gen_security: slice_direction must be nonzero");
    // s = 1 saturates whichever binds first: the resource budget or full
    // coverage of the most-covered target.
    const double slice_scale = std::min(static_cast<double>(r) / dir_sum, 1.0 / dir_max);
    auto rng = make_rng(mix_seed(seed, 0x5ec));
    std::uniform_real_distribution<double> unif01(0.0, 1.0);

    std::vector<Vec> rewards(big_k, Vec(n, 0.0)), penalties(big_k, Vec(n, 0.0));
    std::vector<AgentType> types;
    for (int k = 0; k < big_k; ++k) {
        AgentType t;
        t.id = type_id(k);
        t.directions.assign(n, Vec(n, 0.0));
        t.intercepts.assign(n, 0.0);
        for (int j = 0; j < n; ++j) {
            const double reward = unif01(rng);
            const double penalty = reward - (0.05 + 0.95 * unif01(rng)); // R > P by a real gap
            rewards[k][j] = reward;
            penalties[k][j] = penalty;
            t.directions[j][j] = penalty - reward;
            t.intercepts[j] = reward;
        }
        types.push_back(std::move(t));
    }
    Vec defender_reward(n, 0.0), defender_penalty(n, 0.0);
    for (int j = 0; j < n; ++j) {
        defender_reward[j] = unif01(rng);
        defender_penalty[j] = defender_reward[j] - (0.05 + 0.95 * unif01(rng));
    }
    nlohmann::json meta{{"attacker_rewards", rewards},
                        {"attacker_penalties", penalties},
                        {"defender_rewards", defender_reward},
                        {"defender_penalties", defender_penalty},
                        {"resources", r}};

    std::vector<LinearConstraint> cover{LinearConstraint{Vec(n, 1.0), static_cast<double>(r)}};
    nlohmann::json full_meta = meta;
    full_meta["variant"] = "full";
    GameInstance full(StrategySpace::box(n, 0.0, 1.0, cover), types, GameClass::Security, std::move(full_meta));

    // 1-D slice x(s) = s * scale * direction; the default direction is the
    // all-ones uniform coverage sweep with scale r/n.
    Mat chart(n, 1);
    for (int i = 0; i < n; ++i) chart.at(i, 0) = slice_scale * slice_direction[i];
    nlohmann::json slice_meta = meta;
    slice_meta["variant"] = "slice";
    GameInstance slice(StrategySpace(std::move(chart), Vec(n, 0.0), Vec{0.0}, Vec{1.0}), types,
                       GameClass::Security, std::move(slice_meta));

    SecurityGame out{std::move(full), std::move(slice), {}};
    out.slice_report = learn::check_assumption_no_dominant(out.slice);
    out.slice_report.merge(learn::check_assumption_breakpoints(out.slice));
    return out;
}

GameInstance gen_contract(int m, int n, int big_k, uint64_t seed, double pay_cap) {
    if (m < 2 || n < 2 || big_k < 1) raise(ErrorCode::InvalidArgument, "gen_contract: need m,n >= 2, K >= 1");
    if (pay_cap <= 0.0) raise(ErrorCode::InvalidArgument, "gen_contract: pay_cap must be positive");
    auto rng = make_rng(mix_seed(seed, 0xc047));
    std::uniform_real_distribution<double> unif01(0.0, 1.0);

    std::vector<AgentType> types;
    for (int k = 0; k < big_k; ++k) {
        AgentType t;
        t.id = type_id(k);
        for (int j = 0; j < n; ++j) {
            t.directions.push_back(dirichlet_uniform(m, rng)); // outcome distribution p_j
            t.intercepts.push_back(-unif01(rng)); // minus effort cost
        }
        types.push_back(std::move(t));
    }
    Vec reward(m);
    for (double& v : reward) v = unif01(rng);
    nlohmann::json meta{{"reward", reward}, {"pay_cap", pay_cap}};
    return GameInstance(StrategySpace::box(m, 0.0, pay_cap), std::move(types), GameClass::Contract,
                        std::move(meta));
}

GameInstance gen_info_acquisition(int nw, int no, int n, int big_k, uint64_t seed) {
    if (nw < 2 || no < 2 || n < 2 || big_k < 1)
        raise(ErrorCode::InvalidArgument, "gen_info_acquisition: need nw,no,n >= 2, K >= 1");
    auto rng = make_rng(mix_seed(seed, 0x1f0));
    std::uniform_real_distribution<double> unif01(0.0, 1.0);
    const int m = nw * no; // score vector indexed by (observation, state)

    std::vector<AgentType> types;
    for (int k = 0; k < big_k; ++k) {
        AgentType t;
        t.id = type_id(k);
        for (int j = 0; j < n; ++j) {
            t.directions.push_back(dirichlet_uniform(m, rng)); // joint Pr(w, o | j)
            t.intercepts.push_back(-unif01(rng));
        }
        types.push_back(std::move(t));
    }
    nlohmann::json meta{{"num_states", nw}, {"num_observations", no}};
    return GameInstance(StrategySpace::box(m, 0.0, 1.0), std::move(types), GameClass::InfoAcq,
                        std::move(meta));
}

GameInstance gen_generic_d1(int n, int big_k, uint64_t seed) {
    if (n < 2 || big_k < 1) raise(ErrorCode::InvalidArgument, "gen_generic_d1: need n >= 2, K >= 1");
    auto rng = make_rng(mix_seed(seed, 0xd1));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const StrategySpace space = StrategySpace::box(1, 0.0, 1.0);

    std::vector<AgentType> types;
    for (int k = 0; k < big_k; ++k) {
        AgentType t;
        t.id = type_id(k);
        // Resample until the envelope descends then ascends: no action
        // dominates and the minimizer is an interior breakpoint, where at
        // least two actions tie (what the halving learners lean on).
        for (int attempt = 0; attempt < 4096; ++attempt) {
            t.directions.assign(n, Vec(1, 0.0));
            t.intercepts.assign(n, 0.0);
            for (int j = 0; j < n; ++j) {
                t.directions[j][0] = unif(rng);
                t.intercepts[j] = unif(rng);
            }
            const auto env = geom::build_envelope(t, space);
            if (env.segments().front().slope < 0.0 && env.segments().back().slope > 0.0) break;
            if (attempt == 4095)
                raise(ErrorCode::Internal, "gen_generic_d1: resampling failed to avoid dominance");
        }
        types.push_back(std::move(t));
    }
    return GameInstance(space, std::move(types), GameClass::Generic, nlohmann::json::object());
}

} // namespace menuprobe::games
