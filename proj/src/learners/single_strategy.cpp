#include "single_strategy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "../error.hpp"
#include "../geometry/envelope.hpp"

namespace menuprobe::learn {

namespace {

std::vector<std::string> ids_of(const GameInstance& game, const std::vector<int>& survivors) {
    std::vector<std::string> ids;
    for (int k : survivors) ids.push_back(game.types()[k].id);
    return ids;
}

[[noreturn]] void count_jump() {
    raise(ErrorCode::CountJump,
          "learn_via_single_strategy: response count jumps by 2 or more at a breakpoint "
          "(shared-breakpoint assumption violated at runtime)");
}

} // namespace

IdentifyResult learn_via_single_strategy(const GameInstance& game, AgentOracle& agent,
                                         const SurvivorObserver& observer) {
    const StrategySpace& space = game.space();
    if (space.effective_dim() != 1)
        raise(ErrorCode::DimensionMismatch, "learn_via_single_strategy: requires effective dimension 1");

    IdentifyResult out;
    out.assumptions = check_assumption_no_dominant(game);
    out.assumptions.merge(check_assumption_breakpoints(game));
    if (!out.assumptions.all_ok())
        raise(ErrorCode::AssumptionViolated, "learn_via_single_strategy: assumption fails: " +
                                                 out.assumptions.violations.front().detail);

    // Envelopes once per run; predictions read them directly (their exact-tie
    // convention matches the simulator's lowest-index rule).
    std::vector<geom::Envelope1D> envs;
    envs.reserve(game.num_types());
    for (const auto& type : game.types()) envs.push_back(geom::build_envelope(type, space));

    std::vector<int> survivors(game.num_types());
    for (int k = 0; k < game.num_types(); ++k) survivors[k] = k;

    RecordingOracle recorder(agent, out.transcript);
    int round = 0;
    while (survivors.size() > 1) {
        const int target = static_cast<int>(survivors.size()) / 2;

        std::vector<int> counts(game.num_actions(), 0);
        for (int k : survivors) ++counts[envs[k].action_at(0.0)];
        int j_star = 0;
        for (int j = 1; j < game.num_actions(); ++j)
            if (counts[j] > counts[j_star]) j_star = j;

        double play_t = 0.0;
        if (counts[j_star] > target) {
            // Event sweep over the survivors' breakpoints: the count of types
            // responding with j* is piecewise constant and, by the
            // shared-breakpoint assumption, moves by at most one per
            // breakpoint, so the leftmost point where it equals floor(K/2)
            // exists. Candidates are the breakpoints themselves and the open
            // intervals after them (represented by midpoints).
            struct Event {
                int left, right;
            };
            std::map<double, std::vector<Event>> groups;
            for (int k : survivors)
                for (const auto& b : envs[k].breakpoints())
                    groups[b.t].push_back(Event{b.left_action, b.right_action});

            bool found = false;
            int count = counts[j_star];
            auto it = groups.begin();
            for (; it != groups.end(); ++it) {
                const double t = it->first;
                int at_delta = 0, after_delta = 0;
                for (const Event& e : it->second) {
                    at_delta += (std::min(e.left, e.right) == j_star ? 1 : 0) - (e.left == j_star ? 1 : 0);
                    after_delta += (e.right == j_star ? 1 : 0) - (e.left == j_star ? 1 : 0);
                }
                if (std::abs(after_delta) > 1) count_jump();
                if (!found && count + at_delta == target) {
                    play_t = t;
                    found = true;
                }
                count += after_delta;
                if (!found && count == target) {
                    auto next = std::next(it);
                    const double next_t = next == groups.end() ? 1.0 : next->first;
                    play_t = 0.5 * (t + next_t);
                    found = true;
                }
            }
            if (!found) count_jump();

            const Strategy x = space.embed({play_t});
            const int resp = recorder.respond(x);
            ++round;
            std::vector<int> next;
            if (resp == j_star) {
                for (int k : survivors)
                    if (envs[k].action_at(play_t) == j_star) next.push_back(k);
            } else {
                for (int k : survivors)
                    if (envs[k].action_at(play_t) != j_star) next.push_back(k);
            }
            survivors = std::move(next);
        } else {
            const Strategy x = space.embed({play_t});
            const int resp = recorder.respond(x);
            ++round;
            std::vector<int> next;
            for (int k : survivors)
                if (envs[k].action_at(0.0) == resp) next.push_back(k);
            survivors = std::move(next);
        }
        if (survivors.empty())
            raise(ErrorCode::NoMatch, "learn_via_single_strategy: observed behavior matches no type");
        if (observer) observer(round, ids_of(game, survivors));
    }
    out.type_id = game.types()[survivors.front()].id;
    return out;
}

} // namespace menuprobe::learn
