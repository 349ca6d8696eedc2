#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "../core/types.hpp"

namespace menuprobe::learn {

struct AssumptionViolation {
    int assumption = 0; // 1 = non-parallel gradients, 2 = no dominant action, 3 = no shared breakpoints
    std::string type_a;
    std::string type_b; // empty for single-type findings
    int action = -1;
    double point = 0.0; // effective coordinate where relevant (assumption 3)
    std::string detail;
};

struct AssumptionReport {
    std::optional<bool> nonparallel_ok;
    std::optional<bool> no_dominant_ok;
    std::optional<bool> breakpoints_ok;
    std::vector<AssumptionViolation> violations;

    bool all_ok() const {
        return nonparallel_ok.value_or(true) && no_dominant_ok.value_or(true) &&
               breakpoints_ok.value_or(true);
    }
    void merge(const AssumptionReport& other);
};

nlohmann::json assumption_report_to_json(const AssumptionReport& r);

// Non-parallel gradients: for every action j and pair of distinct types the
// effective gradients w_j = A^T v_j must not be proportional. Forced to fail
// whenever the effective dimension is 1 (scalars are always proportional).
AssumptionReport check_assumption_nonparallel(const GameInstance& game);

// No dominant action: per type, no single action attains the utility
// envelope on all of [0, 1]. Requires effective dimension 1.
AssumptionReport check_assumption_no_dominant(const GameInstance& game);

// No shared breakpoints: two distinct types must not have envelope
// breakpoints at the same point involving a common action (such a collision
// lets the count of types best-responding with that action jump by 2).
// Requires effective dimension 1.
AssumptionReport check_assumption_breakpoints(const GameInstance& game);

// All checks applicable to the game's dimensionality.
AssumptionReport check_applicable(const GameInstance& game);

} // namespace menuprobe::learn
