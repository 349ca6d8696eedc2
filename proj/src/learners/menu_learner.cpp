#include "menu_learner.hpp"

#include <algorithm>
#include <cmath>

#include "../error.hpp"
#include "../geometry/envelope.hpp"

namespace menuprobe::learn {

namespace {

struct Group {
    double minimizer;
    std::vector<int> type_indices;
};

std::vector<std::string> surviving_ids(const GameInstance& game, const std::vector<Group>& groups) {
    std::vector<std::string> ids;
    for (const auto& g : groups)
        for (int k : g.type_indices) ids.push_back(game.types()[k].id);
    return ids;
}

// Greedy augmenting-path matching of types to distinct maximal actions.
bool try_assign(int t, const std::vector<std::vector<int>>& choices, std::vector<int>& action_owner,
                std::vector<bool>& visited, std::vector<int>& assigned) {
    for (int a : choices[t]) {
        if (visited[a]) continue;
        visited[a] = true;
        if (action_owner[a] < 0 || try_assign(action_owner[a], choices, action_owner, visited, assigned)) {
            action_owner[a] = t;
            assigned[t] = a;
            return true;
        }
    }
    return false;
}

} // namespace

IdentifyResult learn_via_menu(const GameInstance& game, AgentOracle& agent, const SurvivorObserver& observer) {
    const StrategySpace& space = game.space();
    if (space.effective_dim() != 1)
        raise(ErrorCode::DimensionMismatch, "learn_via_menu: requires effective dimension 1");

    IdentifyResult out;
    out.assumptions = check_assumption_no_dominant(game);
    if (!out.assumptions.all_ok())
        raise(ErrorCode::AssumptionViolated,
              "learn_via_menu: dominant-action assumption fails: " + out.assumptions.violations.front().detail);

    // Sorted envelope minimizers, clustered so that near-identical values
    // (within 1e-9) form one group and the posted two-item menus stay distinct.
    std::vector<std::pair<double, int>> mins;
    for (int k = 0; k < game.num_types(); ++k)
        mins.emplace_back(geom::envelope_minimizer(geom::build_envelope(game.types()[k], space)), k);
    std::sort(mins.begin(), mins.end());
    std::vector<Group> groups;
    for (const auto& [value, k] : mins) {
        if (groups.empty() || value - groups.back().minimizer > 1e-9)
            groups.push_back(Group{value, {}});
        groups.back().type_indices.push_back(k);
    }

    RecordingOracle recorder(agent, out.transcript);
    int round = 0;
    while (groups.size() > 1) {
        const int k = static_cast<int>(groups.size());
        const int p1 = k / 2 - 1;
        const int p2 = k / 2;
        const std::vector<Strategy> menu = {space.embed({groups[p1].minimizer}),
                                            space.embed({groups[p2].minimizer})};
        const FiniteChoice choice = recorder.choose_finite(menu, {});
        ++round;
        if (choice.item_index == 0) {
            // Preferring the left point means the agent's own minimizer lies
            // to its right (the envelope decreases toward the minimizer).
            groups.erase(groups.begin(), groups.begin() + p1 + 1);
        } else {
            groups.erase(groups.begin() + p2, groups.end());
        }
        if (observer) observer(round, surviving_ids(game, groups));
    }

    const Group& last = groups.front();
    if (last.type_indices.size() == 1) {
        out.type_id = game.types()[last.type_indices[0]].id;
        return out;
    }

    // Types sharing the minimizer: post the shared point once, announcing a
    // tie-break rule that maps each surviving type to a distinct maximal
    // action, so the response identifies the type.
    const Strategy shared = space.embed({last.minimizer});
    const int t_count = static_cast<int>(last.type_indices.size());
    std::vector<std::vector<int>> choices(t_count);
    for (int i = 0; i < t_count; ++i)
        choices[i] = maximal_actions(game.types()[last.type_indices[i]], shared, kDefaultTieTol);
    std::vector<int> action_owner(game.num_actions(), -1);
    std::vector<int> assigned(t_count, -1);
    for (int i = 0; i < t_count; ++i) {
        std::vector<bool> visited(game.num_actions(), false);
        if (!try_assign(i, choices, action_owner, visited, assigned))
            raise(ErrorCode::IndistinguishableTypes,
                  "learn_via_menu: surviving types share a minimizer and admit no injective "
                  "tie-break assignment");
    }
    TieBreakRule announced;
    for (int i = 0; i < t_count; ++i) announced.preferred[game.types()[last.type_indices[i]].id] = assigned[i];

    const FiniteChoice resp = recorder.choose_finite({shared}, announced);
    ++round;
    for (int i = 0; i < t_count; ++i)
        if (assigned[i] == resp.action) {
            out.type_id = game.types()[last.type_indices[i]].id;
            if (observer) observer(round, {out.type_id});
            return out;
        }
    raise(ErrorCode::NoMatch, "learn_via_menu: response matches no announced tie-break assignment");
}

} // namespace menuprobe::learn
