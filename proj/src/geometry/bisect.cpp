#include "bisect.hpp"

#include <cmath>
#include <limits>

#include "../error.hpp"

namespace menuprobe::geom {

namespace {

Strategy along(const Strategy& a, const Strategy& b, double s) {
    Vec p = a.coords;
    for (size_t i = 0; i < p.size(); ++i) p[i] += s * (b.coords[i] - a.coords[i]);
    return Strategy{std::move(p)};
}

BisectResult run_bisection(AgentOracle& agent, const Strategy& a, const Strategy& b, int precision_bits,
                           int action_a, int action_b, int endpoint_queries) {
    if (action_a == action_b)
        raise(ErrorCode::EqualResponses, "bisect_hyperplane: endpoints elicit the same action");
    if (precision_bits < 1 || precision_bits > 200)
        raise(ErrorCode::InvalidArgument, "bisect_hyperplane: precision_bits out of range");

    double s_lo = 0.0, s_hi = 1.0;
    int lo_action = action_a, hi_action = action_b;
    int queries = endpoint_queries;
    const double stop = std::ldexp(1.0, -precision_bits); // 2^-L
    while (s_hi - s_lo > stop) {
        const double mid = 0.5 * (s_lo + s_hi);
        const int jm = agent.respond(along(a, b, mid));
        ++queries;
        if (jm == lo_action) {
            s_lo = mid;
        } else {
            s_hi = mid;
            hi_action = jm; // third action: bracket the (lo, jm) boundary instead
        }
    }
    BisectResult r;
    r.point = along(a, b, 0.5 * (s_lo + s_hi));
    r.lo_action = lo_action;
    r.hi_action = hi_action;
    r.lo_point = along(a, b, s_lo);
    r.hi_point = along(a, b, s_hi);
    r.queries = queries;
    return r;
}

} // namespace

BisectResult bisect_hyperplane(AgentOracle& agent, const Strategy& a, const Strategy& b,
                               int precision_bits) {
    const int ja = agent.respond(a);
    const int jb = agent.respond(b);
    return run_bisection(agent, a, b, precision_bits, ja, jb, 2);
}

BisectResult bisect_hyperplane(AgentOracle& agent, const Strategy& a, const Strategy& b,
                               int precision_bits, int known_action_a, int known_action_b) {
    return run_bisection(agent, a, b, precision_bits, known_action_a, known_action_b, 0);
}

LinkSolution solve_link(double scale_j, double intercept_j, const Vec& dir_j, const Vec& dir_jp,
                        const std::vector<Vec>& points) {
    if (points.size() < 2) raise(ErrorCode::InvalidArgument, "solve_link: need at least 2 points");
    if (scale_j <= 0.0) raise(ErrorCode::InvalidArgument, "solve_link: known scale must be positive");

    std::vector<double> proj, rhs;
    double pmin = std::numeric_limits<double>::infinity();
    double pmax = -pmin;
    for (const auto& x : points) {
        const double a = dot(dir_jp, x);
        proj.push_back(a);
        rhs.push_back(scale_j * dot(dir_j, x) + intercept_j);
        pmin = std::min(pmin, a);
        pmax = std::max(pmax, a);
    }
    if (pmax - pmin <= 1e-6)
        raise(ErrorCode::DegenerateSpread,
              "solve_link: points project onto a single value along the target direction");

    // Least squares for d = scale * a + intercept via 2x2 normal equations.
    const double nn = static_cast<double>(points.size());
    double sa = 0.0, saa = 0.0, sd = 0.0, sad = 0.0;
    for (size_t k = 0; k < points.size(); ++k) {
        sa += proj[k];
        saa += proj[k] * proj[k];
        sd += rhs[k];
        sad += proj[k] * rhs[k];
    }
    const double det = saa * nn - sa * sa;
    if (std::fabs(det) < 1e-18) raise(ErrorCode::DegenerateSpread, "solve_link: singular normal equations");
    LinkSolution sol;
    sol.scale = (sad * nn - sa * sd) / det;
    sol.intercept = (saa * sd - sa * sad) / det;
    if (sol.scale <= 0.0)
        raise(ErrorCode::NonpositiveScale,
              "solve_link: solved scale is not positive (wrong direction sign or non-adjacent regions)");
    for (size_t k = 0; k < points.size(); ++k)
        sol.residual = std::max(sol.residual, std::fabs(sol.scale * proj[k] + sol.intercept - rhs[k]));
    return sol;
}

} // namespace menuprobe::geom
