#include "types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <unordered_set>

#include <json.hpp>

#include "../error.hpp"

namespace menuprobe {

StrategySpace::StrategySpace(Mat chart, Vec offset, Vec box_lo, Vec box_hi,
                             std::vector<LinearConstraint> constraints)
    : chart_(std::move(chart)),
      offset_(std::move(offset)),
      box_lo_(std::move(box_lo)),
      box_hi_(std::move(box_hi)),
      constraints_(std::move(constraints)) {
    const int m = static_cast<int>(offset_.size());
    const int d = chart_.cols;
    if (m <= 0 || d <= 0 || d > m || chart_.rows != m)
        raise(ErrorCode::InvalidArgument, "StrategySpace: bad chart shape");
    if (static_cast<int>(box_lo_.size()) != d || static_cast<int>(box_hi_.size()) != d)
        raise(ErrorCode::DimensionMismatch, "StrategySpace: box bounds must have length d");
    for (int i = 0; i < d; ++i)
        if (!(box_lo_[i] < box_hi_[i]))
            raise(ErrorCode::InvalidArgument, "StrategySpace: empty box");
    for (const auto& c : constraints_)
        if (static_cast<int>(c.g.size()) != d)
            raise(ErrorCode::DimensionMismatch, "StrategySpace: constraint normal must have length d");
    if (smallest_singular_value(chart_) <= 1e-9)
        raise(ErrorCode::DegenerateInstance, "StrategySpace: chart matrix is rank deficient");
}

StrategySpace StrategySpace::box(int dim, double lo, double hi, std::vector<LinearConstraint> constraints) {
    return StrategySpace(Mat::identity(dim), Vec(dim, 0.0), Vec(dim, lo), Vec(dim, hi),
                         std::move(constraints));
}

StrategySpace StrategySpace::simplex(int m) {
    if (m < 2) raise(ErrorCode::InvalidArgument, "simplex: m must be >= 2");
    const int d = m - 1;
    Mat a(m, d);
    for (int i = 0; i < d; ++i) a.at(i, i) = 1.0;
    for (int j = 0; j < d; ++j) a.at(m - 1, j) = -1.0;
    Vec b(m, 0.0);
    b[m - 1] = 1.0;
    std::vector<LinearConstraint> cons;
    if (d >= 2) cons.push_back(LinearConstraint{Vec(d, 1.0), 1.0}); // sum t <= 1 (x_m >= 0)
    return StrategySpace(std::move(a), std::move(b), Vec(d, 0.0), Vec(d, 1.0), std::move(cons));
}

Strategy StrategySpace::embed(const Vec& t) const { return Strategy{add(matvec(chart_, t), offset_)}; }

Vec StrategySpace::to_effective(const Vec& ambient) const {
    if (static_cast<int>(ambient.size()) != ambient_dim())
        raise(ErrorCode::DimensionMismatch, "to_effective: ambient size mismatch");
    const int d = effective_dim();
    // Normal equations (A^T A) t = A^T (x - b); chart has full column rank.
    Mat gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double s = 0.0;
            for (int r = 0; r < chart_.rows; ++r) s += chart_.at(r, i) * chart_.at(r, j);
            gram.at(i, j) = s;
        }
    return solve_linear(std::move(gram), matvec_t(chart_, sub(ambient, offset_)));
}

Vec StrategySpace::effective_gradient(const Vec& ambient_v) const { return matvec_t(chart_, ambient_v); }

double StrategySpace::effective_intercept(const Vec& ambient_v, double c) const {
    return dot(ambient_v, offset_) + c;
}

bool StrategySpace::contains(const Vec& t, double tol) const {
    if (static_cast<int>(t.size()) != effective_dim()) return false;
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] < box_lo_[i] - tol || t[i] > box_hi_[i] + tol) return false;
    for (const auto& c : constraints_)
        if (dot(c.g, t) > c.h + tol) return false;
    return true;
}

bool StrategySpace::contains_ambient(const Vec& x, double tol) const {
    Vec t = to_effective(x);
    if (!contains(t, tol)) return false;
    // The pullback must actually reproduce x (x must lie on the chart).
    return dist2(embed(t).coords, x) <= tol * (1.0 + norm2(x));
}

double StrategySpace::boundary_distance(const Vec& t) const {
    double dist = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < t.size(); ++i) {
        dist = std::min(dist, t[i] - box_lo_[i]);
        dist = std::min(dist, box_hi_[i] - t[i]);
    }
    for (const auto& c : constraints_) {
        const double gn = norm2(c.g);
        if (gn < 1e-15) continue;
        dist = std::min(dist, (c.h - dot(c.g, t)) / gn);
    }
    return dist;
}

Vec StrategySpace::sample(std::mt19937_64& rng) const {
    const int d = effective_dim();
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Vec t(d);
        for (int i = 0; i < d; ++i) t[i] = box_lo_[i] + (box_hi_[i] - box_lo_[i]) * unif(rng);
        bool ok = true;
        for (const auto& c : constraints_)
            if (dot(c.g, t) > c.h) {
                ok = false;
                break;
            }
        if (ok) return t;
    }
    raise(ErrorCode::Internal, "StrategySpace::sample: rejection sampling failed");
}

Vec StrategySpace::center() const {
    const int d = effective_dim();
    Vec t(d);
    for (int i = 0; i < d; ++i) t[i] = 0.5 * (box_lo_[i] + box_hi_[i]);
    // Shrink toward the box minimum until the linear constraints hold
    // strictly; covers the simplex (center would violate sum <= 1 for d >= 2).
    for (int step = 0; step < 64; ++step) {
        bool ok = true;
        for (const auto& c : constraints_)
            if (dot(c.g, t) >= c.h) {
                ok = false;
                break;
            }
        if (ok) return t;
        for (int i = 0; i < d; ++i) t[i] = box_lo_[i] + 0.5 * (t[i] - box_lo_[i]);
    }
    raise(ErrorCode::DegenerateInstance, "StrategySpace::center: no interior point found");
}

double StrategySpace::diameter() const { return dist2(box_hi_, box_lo_); }

bool StrategySpace::is_identity_chart(double tol) const {
    if (effective_dim() != ambient_dim()) return false;
    for (int i = 0; i < chart_.rows; ++i) {
        if (std::fabs(offset_[i]) > tol) return false;
        for (int j = 0; j < chart_.cols; ++j)
            if (std::fabs(chart_.at(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
    return true;
}

void AgentType::validate() const {
    if (actions() < 2) raise(ErrorCode::InvalidArgument, "AgentType '" + id + "': needs at least 2 actions");
    if (static_cast<int>(intercepts.size()) != actions())
        raise(ErrorCode::DimensionMismatch, "AgentType '" + id + "': intercept count mismatch");
    const int m = ambient_dim();
    for (const auto& v : directions) {
        if (static_cast<int>(v.size()) != m)
            raise(ErrorCode::DimensionMismatch, "AgentType '" + id + "': ragged directions");
        if (!all_finite(v)) raise(ErrorCode::InvalidArgument, "AgentType '" + id + "': non-finite direction");
    }
    if (!all_finite(intercepts)) raise(ErrorCode::InvalidArgument, "AgentType '" + id + "': non-finite intercept");
}

const char* game_class_name(GameClass c) {
    switch (c) {
        case GameClass::Stackelberg: return "stackelberg";
        case GameClass::Security: return "security";
        case GameClass::Contract: return "contract";
        case GameClass::InfoAcq: return "info_acq";
        case GameClass::Generic: return "generic";
    }
    return "generic";
}

GameClass game_class_from_name(const std::string& name) {
    if (name == "stackelberg") return GameClass::Stackelberg;
    if (name == "security") return GameClass::Security;
    if (name == "contract") return GameClass::Contract;
    if (name == "info_acq") return GameClass::InfoAcq;
    if (name == "generic") return GameClass::Generic;
    raise(ErrorCode::Parse, "unknown game class '" + name + "'");
}

GameInstance::GameInstance(StrategySpace space, std::vector<AgentType> types, GameClass cls,
                           nlohmann::json metadata)
    : space_(std::move(space)),
      types_(std::move(types)),
      class_(cls),
      metadata_(std::make_unique<nlohmann::json>(std::move(metadata))) {
    if (types_.empty()) raise(ErrorCode::InvalidArgument, "GameInstance: empty type set");
    const int n = types_[0].actions();
    const int m = space_.ambient_dim();
    std::unordered_set<std::string> ids;
    for (const auto& t : types_) {
        t.validate();
        if (t.actions() != n) raise(ErrorCode::InvalidArgument, "GameInstance: types disagree on action count");
        if (t.ambient_dim() != m)
            raise(ErrorCode::DimensionMismatch, "GameInstance: type dimension != ambient dimension");
        if (!ids.insert(t.id).second)
            raise(ErrorCode::InvalidArgument, "GameInstance: duplicate type id '" + t.id + "'");
    }
}

GameInstance::~GameInstance() = default;
GameInstance::GameInstance(GameInstance&&) noexcept = default;
GameInstance& GameInstance::operator=(GameInstance&&) noexcept = default;

GameInstance::GameInstance(const GameInstance& other)
    : space_(other.space_),
      types_(other.types_),
      class_(other.class_),
      metadata_(std::make_unique<nlohmann::json>(*other.metadata_)) {}

GameInstance& GameInstance::operator=(const GameInstance& other) {
    if (this != &other) {
        space_ = other.space_;
        types_ = other.types_;
        class_ = other.class_;
        metadata_ = std::make_unique<nlohmann::json>(*other.metadata_);
    }
    return *this;
}

const nlohmann::json& GameInstance::metadata() const { return *metadata_; }

const AgentType& GameInstance::type_by_id(const std::string& id) const {
    for (const auto& t : types_)
        if (t.id == id) return t;
    raise(ErrorCode::UnknownType, "no type with id '" + id + "'");
}

int GameInstance::index_of(const std::string& id) const {
    for (size_t i = 0; i < types_.size(); ++i)
        if (types_[i].id == id) return static_cast<int>(i);
    raise(ErrorCode::UnknownType, "no type with id '" + id + "'");
}

int TieBreakRule::select(const std::string& type_id, const std::vector<int>& maximal_sorted) const {
    if (maximal_sorted.empty()) raise(ErrorCode::Internal, "TieBreakRule: empty maximal set");
    auto it = preferred.find(type_id);
    if (it != preferred.end() &&
        std::find(maximal_sorted.begin(), maximal_sorted.end(), it->second) != maximal_sorted.end())
        return it->second;
    return maximal_sorted.front();
}

} // namespace menuprobe
