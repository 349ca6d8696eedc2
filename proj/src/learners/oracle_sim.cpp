#include "oracle_sim.hpp"

#include "../error.hpp"
#include "../rng.hpp"

namespace menuprobe::learn {

std::vector<Strategy> sample_action_strategies(const AgentType& truth, const StrategySpace& space,
                                               long max_probes, uint64_t seed) {
    auto rng = make_rng(seed);
    const int n = truth.actions();
    std::vector<Strategy> found(n);
    std::vector<bool> have(n, false);
    int remaining = n;
    for (long p = 0; p < max_probes && remaining > 0; ++p) {
        const Strategy x = space.embed(space.sample(rng));
        const int j = best_response(truth, x);
        if (!have[j]) {
            have[j] = true;
            found[j] = x;
            --remaining;
        }
    }
    if (remaining > 0)
        raise(ErrorCode::DegenerateInstance,
              "sample_action_strategies: some action is never a best response "
              "(the action-informed oracle cannot be realised for this type)");
    return found;
}

} // namespace menuprobe::learn
