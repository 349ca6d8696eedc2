#pragma once

#include <cstdint>

#include "../core/agent.hpp"

namespace menuprobe::learn {

// The strategies promised by the action-informed oracle: one per agent
// action, each eliciting that action as the best response. Validation probes
// the agent once per strategy.
class OracleStrategies {
public:
    static OracleStrategies validated(AgentOracle& agent, std::vector<Strategy> per_action,
                                      int* probes_used = nullptr);

    int actions() const { return static_cast<int>(per_action_.size()); }
    const Strategy& at(int action) const { return per_action_[action]; }

private:
    explicit OracleStrategies(std::vector<Strategy> per_action) : per_action_(std::move(per_action)) {}
    std::vector<Strategy> per_action_;
};

struct ReconstructedAction {
    Vec direction; // unit vector
    double scale = 0.0; // lambda_j > 0 when resolved
    double intercept = 0.0;
    bool resolved = false;
};

// Utility parameters identified up to the behavioral symmetry (common
// positive scaling, common intercept shift), pinned by the gauge
// scale[reference_action] = 1, intercept[reference_action] = 0.
struct ReconstructedType {
    std::vector<ReconstructedAction> actions;
    int reference_action = 0;
    int precision_bits = 0;

    bool complete() const;
    // Materializes v_j = scale_j * direction_j for behavioral comparison.
    AgentType to_agent_type(const std::string& id) const;
};

struct ReconstructionResult {
    ReconstructedType reconstruction;
    Transcript transcript;
};

// Learns an unknown linear-utility agent on an identity-chart box space of
// dimension >= 2. Per action, a ball menu around the oracle strategy (radius
// halved until the response matches, at most 64 times) yields the unit
// gradient direction from the observed choice. Scales and intercepts then
// propagate from the reference action across the best-response region graph:
// each frontier pair contributes 4 boundary points found by bisecting
// jittered segments between certified region points, and a least-squares
// solve of the boundary utility equalities links the unknown pair to a
// resolved one. Regions unreachable through any boundary are reported
// unresolved (partial result) rather than guessed.
ReconstructionResult learn_infinite_type(AgentOracle& agent, const OracleStrategies& oracle_strats,
                                         const StrategySpace& space, int precision_bits,
                                         uint64_t seed = 0x9e3779b9ULL);

} // namespace menuprobe::learn
