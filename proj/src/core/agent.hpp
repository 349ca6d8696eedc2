#pragma once

#include <memory>

#include "simulate.hpp"

namespace menuprobe {

// What a learner sees of the agent: a best-responding black box. Learners may
// announce a tie-break rule along with each posted menu (the principal fixes
// how indifference is resolved); the agent honors its own type's entry.
class AgentOracle {
public:
    virtual ~AgentOracle() = default;

    virtual FiniteChoice choose_finite(const std::vector<Strategy>& items,
                                       const TieBreakRule& announced) = 0;
    virtual BallChoice choose_ball(const Vec& center, double radius) = 0;
    virtual int respond(const Strategy& x, const TieBreakRule& announced) = 0;

    FiniteChoice choose_finite(const std::vector<Strategy>& items) { return choose_finite(items, {}); }
    int respond(const Strategy& x) { return respond(x, {}); }
};

// Exact simulator of one ground-truth type.
class SimulatedAgent : public AgentOracle {
public:
    using AgentOracle::choose_finite;
    using AgentOracle::respond;

    SimulatedAgent(StrategySpace space, AgentType type) : space_(std::move(space)), type_(std::move(type)) {}

    FiniteChoice choose_finite(const std::vector<Strategy>& items, const TieBreakRule& announced) override {
        return choose_from_finite_menu(type_, items, announced);
    }
    BallChoice choose_ball(const Vec& center, double radius) override {
        return choose_from_ball_menu(type_, space_, center, radius);
    }
    int respond(const Strategy& x, const TieBreakRule& announced) override {
        return best_response(type_, x, announced);
    }

    const AgentType& type() const { return type_; }
    const StrategySpace& space() const { return space_; }

private:
    StrategySpace space_;
    AgentType type_;
};

// Wraps an oracle and appends every interaction to a transcript; one entry
// per posted menu, which is the unit all round counts are stated in.
class RecordingOracle : public AgentOracle {
public:
    using AgentOracle::choose_finite;
    using AgentOracle::respond;

    RecordingOracle(AgentOracle& inner, Transcript& transcript) : inner_(inner), transcript_(transcript) {}

    FiniteChoice choose_finite(const std::vector<Strategy>& items, const TieBreakRule& announced) override {
        FiniteChoice c = inner_.choose_finite(items, announced);
        transcript_.rounds.push_back(Round{Menu::finite(items), c.strategy, c.action});
        return c;
    }
    BallChoice choose_ball(const Vec& center, double radius) override {
        BallChoice c = inner_.choose_ball(center, radius);
        transcript_.rounds.push_back(Round{Menu::ball(center, radius), c.strategy, c.action});
        return c;
    }
    int respond(const Strategy& x, const TieBreakRule& announced) override {
        const int j = inner_.respond(x, announced);
        transcript_.rounds.push_back(Round{Menu::finite({x}), x, j});
        return j;
    }

private:
    AgentOracle& inner_;
    Transcript& transcript_;
};

} // namespace menuprobe
