#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "error.hpp"
#include "games/generators.hpp"
#include "geometry/bisect.hpp"
#include "geometry/envelope.hpp"
#include "geometry/regions.hpp"
#include "helpers.hpp"

using namespace menuprobe;
using testutil::random_type;

namespace {

const StrategySpace kLine = StrategySpace::box(1, 0.0, 1.0);

AgentType lines_type(std::vector<std::pair<double, double>> slope_intercept, const std::string& id = "L") {
    AgentType t;
    t.id = id;
    for (auto [s, c] : slope_intercept) {
        t.directions.push_back({s});
        t.intercepts.push_back(c);
    }
    return t;
}

} // namespace

TEST_CASE("envelope of crossing lines") {
    const auto env = geom::build_envelope(lines_type({{1.0, 0.0}, {-1.0, 1.0}}), kLine);
    REQUIRE(env.segments().size() == 2);
    CHECK(env.segments()[0].action == 1); // 1 - t on the left
    CHECK(env.segments()[0].slope == doctest::Approx(-1.0));
    CHECK(env.segments()[1].action == 0);
    CHECK(env.segments()[1].slope == doctest::Approx(1.0));
    CHECK(env.segments()[0].t_end == doctest::Approx(0.5));
    CHECK(envelope_minimizer(env) == doctest::Approx(0.5));
    const auto bps = env.breakpoints();
    REQUIRE(bps.size() == 1);
    CHECK(bps[0].left_action == 1);
    CHECK(bps[0].right_action == 0);
}

TEST_CASE("single-line envelopes and boundary minimizers") {
    AgentType t = lines_type({{1.0, 0.0}, {0.5, -2.0}}); // second line strictly below
    const auto env = geom::build_envelope(t, kLine);
    REQUIRE(env.segments().size() == 1);
    CHECK(env.segments()[0].action == 0);
    CHECK(env.segments()[0].t_begin == 0.0);
    CHECK(env.segments()[0].t_end == 1.0);
    CHECK(envelope_minimizer(env) == 0.0); // increasing line bottoms out at the left edge

    // all slopes negative: minimizer at the right edge
    const auto env2 = geom::build_envelope(lines_type({{-1.0, 1.0}, {-2.0, 0.5}}), kLine);
    CHECK(envelope_minimizer(env2) == 1.0);
}

TEST_CASE("collinear duplicates merge keeping the lowest action") {
    const auto env = geom::build_envelope(lines_type({{1.0, 0.0}, {1.0, 0.0}, {-1.0, 1.0}}), kLine);
    REQUIRE(env.segments().size() == 2);
    CHECK(env.segments()[1].action == 0);
}

TEST_CASE("random envelopes match pointwise brute force") {
    auto rng = make_rng(5150);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const AgentType t = random_type(5, 1, rng);
        const auto env = geom::build_envelope(t, kLine);
        // convexity: slopes strictly increase
        for (size_t i = 0; i + 1 < env.segments().size(); ++i)
            CHECK(env.segments()[i].slope < env.segments()[i + 1].slope);
        for (int g = 0; g <= 1000; ++g) {
            const double x = g / 1000.0;
            double best = -1e300;
            for (int j = 0; j < t.actions(); ++j)
                best = std::max(best, t.directions[j][0] * x + t.intercepts[j]);
            CHECK(env.value(x) == doctest::Approx(best).epsilon(1e-12));
        }
        (void)unif;
    }
}

TEST_CASE("random envelope minimizers match a dense grid argmin") {
    auto rng = make_rng(8088);
    for (int rep = 0; rep < 50; ++rep) {
        const AgentType t = random_type(5, 1, rng);
        const auto env = geom::build_envelope(t, kLine);
        const double mt = envelope_minimizer(env);
        double grid_best = 1e300;
        double grid_arg = 0.0;
        const int big = 1000000;
        for (int g = 0; g <= big; ++g) {
            const double x = static_cast<double>(g) / big;
            const double v = env.value(x);
            if (v < grid_best) {
                grid_best = v;
                grid_arg = x;
            }
        }
        CHECK(env.value(mt) <= grid_best + 1e-12);
        // leftmost within grid resolution
        CHECK(mt <= grid_arg + 1e-6);
    }
}

TEST_CASE("region probes report best actions and margins") {
    auto rng = make_rng(17);
    const GameInstance g = games::gen_contract(2, 3, 4, 31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const Vec t{unif(rng), unif(rng)};
        const auto p = geom::probe_regions(g, t);
        const Strategy x = g.space().embed(t);
        for (int k = 0; k < g.num_types(); ++k) {
            CHECK(p.best_actions[k] == best_response(g.types()[k], x));
            CHECK(p.margins[k] >= 0.0);
        }
    }
    CHECK_THROWS_AS(geom::probe_regions(g, Vec{2.0, 2.0}), Error);

    // margin equals the gap of the two best lines
    AgentType t2;
    t2.id = "m";
    t2.directions = {{1.0, 0.0}, {0.0, 1.0}};
    t2.intercepts = {0.0, 0.0};
    GameInstance g2(StrategySpace::box(2, 0.0, 1.0), {t2}, GameClass::Generic, nlohmann::json::object());
    const auto probe = geom::probe_regions(g2, {0.7, 0.3});
    CHECK(probe.margins[0] == doctest::Approx(0.4));
    const auto tied = geom::probe_regions(g2, {0.5, 0.5});
    CHECK(tied.margins[0] == doctest::Approx(0.0));
}

TEST_CASE("interior points certify a response-stable ball") {
    SUBCASE("single dominant action accepts any strictly feasible point") {
        AgentType t;
        t.id = "dom";
        t.directions = {{1.0, 1.0}, {0.1, 0.1}};
        t.intercepts = {5.0, 0.0};
        GameInstance g(StrategySpace::box(2, 0.0, 1.0), {t}, GameClass::Generic, nlohmann::json::object());
        const auto ip = geom::find_interior_point(g, 64, 3);
        CHECK(ip.rho_max > 0.0);
        CHECK(g.space().boundary_distance(ip.t_hat) >= ip.rho_max - 1e-12);
    }

    SUBCASE("duplicated types still admit interior points") {
        auto rng = make_rng(21);
        AgentType a = random_type(3, 2, rng, "a");
        AgentType b = a;
        b.id = "b";
        GameInstance g(StrategySpace::box(2, 0.0, 1.0), {a, b}, GameClass::Generic, nlohmann::json::object());
        const auto ip = geom::find_interior_point(g, 512, 5);
        CHECK(ip.rho_max > 0.0);
    }

    SUBCASE("Monte-Carlo certificate: responses constant on the ball") {
        auto rng = make_rng(606);
        for (int rep = 0; rep < 20; ++rep) {
            const GameInstance g = games::gen_contract(3, 4, 6, 100 + rep);
            const auto ip = geom::find_interior_point(g, 512, rep);
            const auto base = geom::probe_regions(g, ip.t_hat);
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            for (int s = 0; s < 1000; ++s) {
                Vec dir(g.space().effective_dim());
                for (double& v : dir) v = gauss(rng);
                const double dn = norm2(dir);
                if (dn < 1e-12) continue;
                const double r = ip.rho_max * std::pow(unif(rng), 1.0 / dir.size());
                const Vec p = axpy(ip.t_hat, r / dn, dir);
                const auto probe = geom::probe_regions(g, p);
                for (int k = 0; k < g.num_types(); ++k) CHECK(probe.best_actions[k] == base.best_actions[k]);
            }
        }
    }

    SUBCASE("1-D spaces are rejected") {
        const GameInstance g = games::gen_generic_d1(3, 2, 9);
        CHECK_THROWS_AS(geom::find_interior_point(g, 16, 0), Error);
    }

    SUBCASE("a type with duplicated actions has zero margin everywhere") {
        AgentType t;
        t.id = "dup";
        t.directions = {{0.3, 0.7}, {0.3, 0.7}};
        t.intercepts = {0.2, 0.2};
        GameInstance g(StrategySpace::box(2, 0.0, 1.0), {t}, GameClass::Generic, nlohmann::json::object());
        try {
            geom::find_interior_point(g, 64, 1);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegenerateInstance);
        }
    }
}

TEST_CASE("bisection pins the separating boundary") {
    const StrategySpace plane = StrategySpace::box(2, 0.0, 1.0);
    AgentType t;
    t.id = "axis";
    t.directions = {{1.0, 0.0}, {0.0, 1.0}};
    t.intercepts = {0.0, 0.0};
    SimulatedAgent agent(plane, t);

    SUBCASE("symmetric crossing lands at the diagonal") {
        const int bits = 30;
        const auto res = geom::bisect_hyperplane(agent, Strategy{{1.0, 0.0}}, Strategy{{0.0, 1.0}}, bits);
        CHECK(std::fabs(res.point.coords[0] - 0.5) < std::ldexp(1.0, -bits) * 2);
        CHECK(std::fabs(res.point.coords[1] - 0.5) < std::ldexp(1.0, -bits) * 2);
        CHECK(res.lo_action == 0);
        CHECK(res.hi_action == 1);
    }

    SUBCASE("query budget is precision_bits + 2") {
        const auto res = geom::bisect_hyperplane(agent, Strategy{{1.0, 0.0}}, Strategy{{0.0, 1.0}}, 10);
        CHECK(res.queries <= 12);
    }

    SUBCASE("equal endpoint responses are an error") {
        CHECK_THROWS_AS(
            geom::bisect_hyperplane(agent, Strategy{{0.9, 0.0}}, Strategy{{0.8, 0.1}}, 10), Error);
    }

    SUBCASE("bracket endpoints always elicit distinct actions") {
        auto rng = make_rng(40);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int rep = 0; rep < 100; ++rep) {
            const AgentType ty = random_type(3, 2, rng, "r");
            SimulatedAgent a2(plane, ty);
            Strategy xa{{unif(rng), unif(rng)}};
            Strategy xb{{unif(rng), unif(rng)}};
            if (a2.respond(xa) == a2.respond(xb)) continue;
            const int bits = 40;
            const auto res = geom::bisect_hyperplane(a2, xa, xb, bits);
            CHECK(a2.respond(res.lo_point) == res.lo_action);
            CHECK(a2.respond(res.hi_point) == res.hi_action);
            CHECK(res.lo_action != res.hi_action);
            // utilities of the two side actions nearly tie at the returned point
            const double ua = utility(ty, res.point, res.lo_action);
            const double ub = utility(ty, res.point, res.hi_action);
            double max_slope = 0.0;
            for (int j = 0; j < ty.actions(); ++j) max_slope = std::max(max_slope, norm2(ty.directions[j]));
            const double seg = dist2(xa.coords, xb.coords);
            // the agent's tie tolerance shifts the observed flip by up to tau
            CHECK(std::fabs(ua - ub) <=
                  2.0 * seg * std::ldexp(1.0, -bits) * max_slope + kDefaultTieTol + 1e-12);
        }
    }
}

TEST_CASE("link solving recovers the neighboring line") {
    SUBCASE("hand-solved 2x2 system") {
        const auto sol = geom::solve_link(1.0, 0.0, {1.0, 0.0}, {0.0, 1.0},
                                          {{0.5, 0.5}, {0.1, 0.3}});
        CHECK(sol.scale == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(sol.intercept == doctest::Approx(-0.5).epsilon(1e-12));
    }

    SUBCASE("forward-generated boundary points recover ground truth") {
        auto rng = make_rng(71);
        std::uniform_real_distribution<double> unif(0.1, 1.0);
        for (int rep = 0; rep < 100; ++rep) {
            // ground truth pair of utility lines in 3-D
            const double lam_j = unif(rng), lam_p = unif(rng);
            Vec dj{unif(rng), unif(rng), unif(rng)}, dp{unif(rng), -unif(rng), unif(rng)};
            dj = scale(dj, 1.0 / norm2(dj));
            dp = scale(dp, 1.0 / norm2(dp));
            const double cj = unif(rng) - 0.5;
            const double cp = unif(rng) - 0.5;
            // sample points satisfying lam_j<dj,x> + cj = lam_p<dp,x> + cp:
            // pick x0, x1 free and solve the third coordinate.
            std::vector<Vec> pts;
            for (int i = 0; i < 4; ++i) {
                const double x0 = unif(rng), x1 = unif(rng);
                const double a2 = lam_j * dj[2] - lam_p * dp[2];
                if (std::fabs(a2) < 1e-3) {
                    --i;
                    continue;
                }
                const double num = (cp - cj) - (lam_j * dj[0] - lam_p * dp[0]) * x0 -
                                   (lam_j * dj[1] - lam_p * dp[1]) * x1;
                pts.push_back({x0, x1, num / a2});
            }
            const auto sol = geom::solve_link(lam_j, cj, dj, dp, pts);
            CHECK(sol.scale == doctest::Approx(lam_p).epsilon(1e-6));
            CHECK(sol.intercept == doctest::Approx(cp).epsilon(1e-6));
            CHECK(sol.residual < 1e-9);
        }
    }

    SUBCASE("duplicate points are a degenerate-spread error") {
        CHECK_THROWS_AS(geom::solve_link(1.0, 0.0, {1.0, 0.0}, {0.0, 1.0}, {{0.5, 0.5}, {0.5, 0.5}}),
                        Error);
    }

    SUBCASE("fewer than two points is an argument error") {
        CHECK_THROWS_AS(geom::solve_link(1.0, 0.0, {1.0, 0.0}, {0.0, 1.0}, {{0.5, 0.5}}), Error);
    }

    SUBCASE("nonpositive solved scale is rejected") {
        // points consistent with a NEGATIVE lambda': d = -1 * proj + 1
        CHECK_THROWS_AS(
            geom::solve_link(1.0, 0.0, {1.0, 0.0}, {0.0, 1.0}, {{0.2, 0.8}, {0.7, 0.3}}),
            Error);
    }
}
