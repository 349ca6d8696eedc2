#include "simulate.hpp"

#include <cmath>
#include <limits>

#include "../error.hpp"

namespace menuprobe {

double utility(const AgentType& type, const Strategy& x, int action) {
    if (action < 0 || action >= type.actions())
        raise(ErrorCode::IndexOutOfRange, "utility: action index out of range");
    if (x.coords.size() != type.directions[action].size())
        raise(ErrorCode::DimensionMismatch, "utility: strategy dimension mismatch");
    return dot(type.directions[action], x.coords) + type.intercepts[action];
}

std::vector<int> maximal_actions(const AgentType& type, const Strategy& x, double tau) {
    const int n = type.actions();
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) {
        u[j] = utility(type, x, j);
        if (u[j] > best) best = u[j];
    }
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
        if (u[j] >= best - tau) out.push_back(j);
    return out;
}

int best_response(const AgentType& type, const Strategy& x, const TieBreakRule& rule) {
    return rule.select(type.id, maximal_actions(type, x, rule.tau));
}

FiniteChoice choose_from_finite_menu(const AgentType& type, const std::vector<Strategy>& items,
                                     const TieBreakRule& rule) {
    if (items.empty()) raise(ErrorCode::EmptyMenu, "choose_from_finite_menu: empty menu");
    int best_item = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < items.size(); ++i) {
        double value = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < type.actions(); ++j) value = std::max(value, utility(type, items[i], j));
        if (value > best_value) {
            best_value = value;
            best_item = static_cast<int>(i);
        }
    }
    FiniteChoice c;
    c.item_index = best_item;
    c.strategy = items[best_item];
    c.action = best_response(type, items[best_item], rule);
    c.value = best_value;
    return c;
}

BallChoice choose_from_ball_menu(const AgentType& type, const StrategySpace& space, const Vec& center,
                                 double radius) {
    if (radius <= 0.0) raise(ErrorCode::InvalidArgument, "choose_from_ball_menu: radius must be positive");
    if (static_cast<int>(center.size()) != space.effective_dim())
        raise(ErrorCode::DimensionMismatch, "choose_from_ball_menu: center dimension mismatch");
    if (space.boundary_distance(center) < radius - kFeasibilityTol)
        raise(ErrorCode::BallOutsideSpace, "choose_from_ball_menu: ball leaves the strategy space");

    const int n = type.actions();
    int best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    Vec best_w;
    double best_wn = 0.0;
    for (int j = 0; j < n; ++j) {
        Vec w = space.effective_gradient(type.directions[j]);
        const double wn = norm2(w);
        const double score = dot(w, center) + space.effective_intercept(type.directions[j], type.intercepts[j]) +
                             radius * wn;
        if (score > best_score) {
            best_score = score;
            best = j;
            best_w = std::move(w);
            best_wn = wn;
        }
    }
    BallChoice c;
    c.action = best;
    c.value = best_score;
    c.t_star = best_wn < 1e-12 ? center : axpy(center, radius / best_wn, best_w);
    c.strategy = space.embed(c.t_star);
    return c;
}

} // namespace menuprobe
