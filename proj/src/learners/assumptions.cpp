#include "assumptions.hpp"

#include <cmath>

#include <json.hpp>

#include "../error.hpp"
#include "../geometry/envelope.hpp"

namespace menuprobe::learn {

void AssumptionReport::merge(const AssumptionReport& other) {
    if (other.nonparallel_ok) nonparallel_ok = other.nonparallel_ok;
    if (other.no_dominant_ok) no_dominant_ok = other.no_dominant_ok;
    if (other.breakpoints_ok) breakpoints_ok = other.breakpoints_ok;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

nlohmann::json assumption_report_to_json(const AssumptionReport& r) {
    nlohmann::json j;
    auto flag = [](const std::optional<bool>& f) {
        return f ? nlohmann::json(*f) : nlohmann::json(nullptr);
    };
    j["nonparallel_ok"] = flag(r.nonparallel_ok);
    j["no_dominant_ok"] = flag(r.no_dominant_ok);
    j["breakpoints_ok"] = flag(r.breakpoints_ok);
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.violations)
        vs.push_back(nlohmann::json{{"assumption", v.assumption},
                                    {"type_a", v.type_a},
                                    {"type_b", v.type_b},
                                    {"action", v.action},
                                    {"point", v.point},
                                    {"detail", v.detail}});
    j["violations"] = vs;
    return j;
}

AssumptionReport check_assumption_nonparallel(const GameInstance& game) {
    AssumptionReport rep;
    rep.nonparallel_ok = true;
    const StrategySpace& space = game.space();
    if (space.effective_dim() == 1 && game.num_types() >= 2) {
        rep.nonparallel_ok = false;
        rep.violations.push_back(AssumptionViolation{
            1, game.types()[0].id, game.types()[1].id, -1, 0.0,
            "effective dimension 1 forces proportional gradients for every action"});
        return rep;
    }
    const int n = game.num_actions();
    const int kk = game.num_types();
    std::vector<std::vector<Vec>> w(kk, std::vector<Vec>(n));
    std::vector<Vec> wn(kk, Vec(n, 0.0));
    for (int k = 0; k < kk; ++k)
        for (int j = 0; j < n; ++j) {
            w[k][j] = space.effective_gradient(game.types()[k].directions[j]);
            wn[k][j] = norm2(w[k][j]);
        }
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < kk; ++a)
            for (int b = a + 1; b < kk; ++b) {
                const double inner = std::fabs(dot(w[a][j], w[b][j]));
                if (inner >= (1.0 - 1e-9) * wn[a][j] * wn[b][j]) {
                    rep.nonparallel_ok = false;
                    rep.violations.push_back(AssumptionViolation{
                        1, game.types()[a].id, game.types()[b].id, j, 0.0,
                        "parallel effective gradients for action " + std::to_string(j)});
                }
            }
    return rep;
}

AssumptionReport check_assumption_no_dominant(const GameInstance& game) {
    if (game.space().effective_dim() != 1)
        raise(ErrorCode::DimensionMismatch, "check_assumption_no_dominant: requires effective dimension 1");
    AssumptionReport rep;
    rep.no_dominant_ok = true;
    for (const auto& type : game.types()) {
        const auto env = geom::build_envelope(type, game.space());
        if (env.segments().size() == 1) {
            rep.no_dominant_ok = false;
            rep.violations.push_back(AssumptionViolation{
                2, type.id, "", env.segments()[0].action, 0.0,
                "action " + std::to_string(env.segments()[0].action) + " is dominant on [0,1]"});
        }
    }
    return rep;
}

AssumptionReport check_assumption_breakpoints(const GameInstance& game) {
    if (game.space().effective_dim() != 1)
        raise(ErrorCode::DimensionMismatch, "check_assumption_breakpoints: requires effective dimension 1");
    AssumptionReport rep;
    rep.breakpoints_ok = true;
    struct Bp {
        double t;
        int left, right;
        int type_index;
    };
    std::vector<Bp> all;
    for (int k = 0; k < game.num_types(); ++k) {
        const auto env = geom::build_envelope(game.types()[k], game.space());
        for (const auto& b : env.breakpoints()) all.push_back(Bp{b.t, b.left_action, b.right_action, k});
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            const Bp& a = all[i];
            const Bp& b = all[j];
            if (a.type_index == b.type_index) continue;
            if (std::fabs(a.t - b.t) > 1e-9) continue;
            const int shared = (a.left == b.left || a.left == b.right) ? a.left
                               : (a.right == b.left || a.right == b.right) ? a.right
                                                                           : -1;
            if (shared < 0) continue;
            rep.breakpoints_ok = false;
            rep.violations.push_back(AssumptionViolation{
                3, game.types()[a.type_index].id, game.types()[b.type_index].id, shared, a.t,
                "types share a breakpoint at t=" + std::to_string(a.t) + " involving action " +
                    std::to_string(shared)});
        }
    return rep;
}

AssumptionReport check_applicable(const GameInstance& game) {
    AssumptionReport rep = check_assumption_nonparallel(game);
    if (game.space().effective_dim() == 1) {
        rep.merge(check_assumption_no_dominant(game));
        rep.merge(check_assumption_breakpoints(game));
    }
    return rep;
}

} // namespace menuprobe::learn
