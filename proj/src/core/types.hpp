#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "../linalg.hpp"

#include <json.hpp>

namespace menuprobe {

inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kDefaultTieTol = 1e-9;

// A principal strategy in ambient coordinates (length = ambient_dim of the
// owning StrategySpace).
struct Strategy {
    Vec coords;
};

struct LinearConstraint {
    Vec g; // effective-coordinate normal, length d
    double h = 0.0; // <g, t> <= h
};

// The principal's feasible set. Ambient strategies live in R^m; the set is
// parameterized through an affine chart x = A t + b over effective
// coordinates t in R^d, with d the actual dimension of the feasible set.
// Constraints (box bounds plus linear inequalities) are expressed on t.
// The chart is mandatory even when d == m so that simplex spaces (d = m-1)
// and 1-D slices are handled uniformly.
class StrategySpace {
public:
    StrategySpace(Mat chart, Vec offset, Vec box_lo, Vec box_hi,
                  std::vector<LinearConstraint> constraints = {});

    // Identity chart over the box [lo, hi]^dim.
    static StrategySpace box(int dim, double lo, double hi,
                             std::vector<LinearConstraint> constraints = {});
    // Probability simplex over m pure actions, chart of effective dimension
    // m-1 with the last coordinate eliminated: x_i = t_i, x_m = 1 - sum(t).
    static StrategySpace simplex(int m);

    int ambient_dim() const { return static_cast<int>(offset_.size()); }
    int effective_dim() const { return chart_.cols; }

    const Mat& chart_matrix() const { return chart_; }
    const Vec& chart_offset() const { return offset_; }
    const Vec& box_lo() const { return box_lo_; }
    const Vec& box_hi() const { return box_hi_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    Strategy embed(const Vec& t) const;
    // Least-squares pullback of an ambient point to effective coordinates.
    Vec to_effective(const Vec& ambient) const;

    // Effective gradient of a linear utility: w = A^T v.
    Vec effective_gradient(const Vec& ambient_v) const;
    // Effective intercept: <v, b> + c.
    double effective_intercept(const Vec& ambient_v, double c) const;

    bool contains(const Vec& t, double tol = kFeasibilityTol) const;
    bool contains_ambient(const Vec& x, double tol = kFeasibilityTol) const;
    // Euclidean distance from t to the nearest constraint boundary
    // (nonpositive outside). Balls of radius <= this stay feasible.
    double boundary_distance(const Vec& t) const;

    // Uniform rejection sample of a feasible t.
    Vec sample(std::mt19937_64& rng) const;
    // Box center pulled to feasibility; a convenient strictly interior point
    // for boxes and simplexes.
    Vec center() const;
    double diameter() const;

    bool is_identity_chart(double tol = 1e-12) const;

private:
    Mat chart_;
    Vec offset_;
    Vec box_lo_, box_hi_;
    std::vector<LinearConstraint> constraints_;
};

// One private agent type: utility of responding with action j to principal
// strategy x is <directions[j], x> + intercepts[j].
struct AgentType {
    std::string id;
    std::vector<Vec> directions;
    Vec intercepts;

    int actions() const { return static_cast<int>(directions.size()); }
    int ambient_dim() const { return directions.empty() ? 0 : static_cast<int>(directions[0].size()); }
    void validate() const;
};

enum class GameClass { Stackelberg, Security, Contract, InfoAcq, Generic };

const char* game_class_name(GameClass c);
GameClass game_class_from_name(const std::string& name);

// A finite type set over a shared strategy space. principal-side payoff data
// (leader matrices, defender rewards, contract reward vectors) is carried as
// inert metadata; no learner reads it.
class GameInstance {
public:
    GameInstance(StrategySpace space, std::vector<AgentType> types, GameClass cls,
                 nlohmann::json metadata);
    ~GameInstance();
    GameInstance(const GameInstance&);
    GameInstance& operator=(const GameInstance&);
    GameInstance(GameInstance&&) noexcept;
    GameInstance& operator=(GameInstance&&) noexcept;

    const StrategySpace& space() const { return space_; }
    const std::vector<AgentType>& types() const { return types_; }
    GameClass game_class() const { return class_; }
    const nlohmann::json& metadata() const;

    int num_types() const { return static_cast<int>(types_.size()); }
    int num_actions() const { return types_.empty() ? 0 : types_[0].actions(); }
    const AgentType& type_by_id(const std::string& id) const;
    int index_of(const std::string& id) const;

private:
    StrategySpace space_;
    std::vector<AgentType> types_;
    GameClass class_;
    // pimpl keeps nlohmann out of most translation units
    std::unique_ptr<nlohmann::json> metadata_;
};

struct BallMenu {
    Vec center; // effective coordinates, length d
    double radius = 0.0; // radius rho; the epsilon of the quadratic menu constraint is rho^2
};

struct FiniteMenu {
    std::vector<Strategy> items;
};

struct Menu {
    std::variant<FiniteMenu, BallMenu> body;

    static Menu finite(std::vector<Strategy> items) { return Menu{FiniteMenu{std::move(items)}}; }
    static Menu ball(Vec center, double radius) { return Menu{BallMenu{std::move(center), radius}}; }

    bool is_finite() const { return std::holds_alternative<FiniteMenu>(body); }
    const FiniteMenu& as_finite() const { return std::get<FiniteMenu>(body); }
    const BallMenu& as_ball() const { return std::get<BallMenu>(body); }
};

// Tie-breaking over utility-maximal actions. The default picks the lowest
// action index. Learners may announce per-type preferred actions (keyed by
// type id); an agent honors its own entry whenever the preferred action is
// actually maximal.
struct TieBreakRule {
    double tau = kDefaultTieTol;
    std::unordered_map<std::string, int> preferred;

    int select(const std::string& type_id, const std::vector<int>& maximal_sorted) const;
};

struct Round {
    Menu menu;
    Strategy chosen;
    int response = -1;
};

struct Transcript {
    std::vector<Round> rounds;
    int round_count() const { return static_cast<int>(rounds.size()); }
};

} // namespace menuprobe
