#include "menuprobe/menuprobe.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/agent.hpp"
#include "core/json_io.hpp"
#include "error.hpp"
#include "rng.hpp"
#include "games/generators.hpp"
#include "games/hardness.hpp"
#include "learners/equivalence.hpp"
#include "learners/menu_learner.hpp"
#include "learners/oracle_sim.hpp"
#include "learners/serialize.hpp"
#include "learners/single_round.hpp"
#include "learners/single_strategy.hpp"

using namespace menuprobe;
using nlohmann::json;

struct mp_game {
    GameInstance instance;
};

struct mp_agent {
    SimulatedAgent simulated;
    std::string type_id;
};

namespace {

thread_local std::string g_last_error;

mp_status to_status(ErrorCode code) { return static_cast<mp_status>(static_cast<int>(code)); }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
mp_status wrap(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return MP_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MP_ERR_INTERNAL;
    }
}

json parse_or_empty(const char* text) { return text && *text ? parse_json(text) : json::object(); }

} // namespace

extern "C" {

const char* mp_version(void) { return "0.1.0"; }

const char* mp_status_name(mp_status status) {
    switch (status) {
        case MP_OK: return "ok";
        case MP_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case MP_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
        case MP_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
        case MP_ERR_EMPTY_MENU: return "empty_menu";
        case MP_ERR_BALL_OUTSIDE_SPACE: return "ball_outside_space";
        case MP_ERR_INFEASIBLE_POINT: return "infeasible_point";
        case MP_ERR_DEGENERATE_INSTANCE: return "degenerate_instance";
        case MP_ERR_ASSUMPTION_VIOLATED: return "assumption_violated";
        case MP_ERR_AMBIGUOUS_MATCH: return "ambiguous_match";
        case MP_ERR_NO_MATCH: return "no_match";
        case MP_ERR_EQUAL_RESPONSES: return "equal_responses";
        case MP_ERR_DEGENERATE_SPREAD: return "degenerate_spread";
        case MP_ERR_NONPOSITIVE_SCALE: return "nonpositive_scale";
        case MP_ERR_COUNT_JUMP: return "count_jump";
        case MP_ERR_INDISTINGUISHABLE_TYPES: return "indistinguishable_types";
        case MP_ERR_REGION_NOT_INTERIOR: return "region_not_interior";
        case MP_ERR_PARTIAL_RESULT: return "partial_result";
        case MP_ERR_PARSE: return "parse_error";
        case MP_ERR_IO: return "io_error";
        case MP_ERR_UNKNOWN_TYPE: return "unknown_type";
        case MP_ERR_INTERNAL: return "internal_error";
    }
    return "unknown_status";
}

const char* mp_last_error(void) { return g_last_error.c_str(); }

void mp_string_free(char* s) { std::free(s); }

mp_status mp_game_generate(const char* game_class, const char* params_json, uint64_t seed,
                           mp_game** game_out) {
    return wrap([&] {
        if (!game_class || !game_out) raise(ErrorCode::InvalidArgument, "null argument");
        const json params = parse_or_empty(params_json);
        const std::string cls = game_class;
        const int m = params.value("m", 3);
        const int n = params.value("n", 3);
        const int big_k = params.value("K", 2);
        if (cls == "stackelberg") {
            *game_out = new mp_game{games::gen_stackelberg(m, n, big_k, seed)};
        } else if (cls == "security") {
            const int r = params.value("r", 1);
            Vec slice_dir;
            if (params.contains("slice_direction")) slice_dir = params.at("slice_direction").get<Vec>();
            auto sec = games::gen_security(n, r, big_k, seed, std::move(slice_dir));
            const std::string variant = params.value("variant", "slice");
            if (variant == "full")
                *game_out = new mp_game{std::move(sec.full)};
            else if (variant == "slice")
                *game_out = new mp_game{std::move(sec.slice)};
            else
                raise(ErrorCode::InvalidArgument, "security variant must be 'slice' or 'full'");
        } else if (cls == "contract") {
            *game_out = new mp_game{games::gen_contract(m, n, big_k, seed, params.value("pay_cap", 1.0))};
        } else if (cls == "info_acq") {
            const int nw = params.value("nw", 2);
            const int no = params.value("no", 2);
            *game_out = new mp_game{games::gen_info_acquisition(nw, no, n, big_k, seed)};
        } else if (cls == "generic") {
            *game_out = new mp_game{games::gen_generic_d1(n, big_k, seed)};
        } else {
            raise(ErrorCode::InvalidArgument, "unknown game class '" + cls + "'");
        }
    });
}

mp_status mp_hardness_build(int m, int big_n, mp_game** game_out, char** menu_json_out) {
    return wrap([&] {
        if (!game_out) raise(ErrorCode::InvalidArgument, "null argument");
        auto h = games::build_hardness_example(m, big_n > 0 ? big_n : 0);
        if (menu_json_out) *menu_json_out = dup_string(menu_to_json(h.menu).dump());
        *game_out = new mp_game{std::move(h.game)};
    });
}

mp_status mp_game_from_json(const char* text, mp_game** game_out) {
    return wrap([&] {
        if (!text || !game_out) raise(ErrorCode::InvalidArgument, "null argument");
        *game_out = new mp_game{game_from_json(parse_json(text))};
    });
}

mp_status mp_game_to_json(const mp_game* game, char** json_out) {
    return wrap([&] {
        if (!game || !json_out) raise(ErrorCode::InvalidArgument, "null argument");
        *json_out = dup_string(game_to_json(game->instance).dump(2));
    });
}

void mp_game_free(mp_game* game) { delete game; }

mp_status mp_game_num_types(const mp_game* game, int* out) {
    return wrap([&] {
        if (!game || !out) raise(ErrorCode::InvalidArgument, "null argument");
        *out = game->instance.num_types();
    });
}

mp_status mp_game_num_actions(const mp_game* game, int* out) {
    return wrap([&] {
        if (!game || !out) raise(ErrorCode::InvalidArgument, "null argument");
        *out = game->instance.num_actions();
    });
}

mp_status mp_game_ambient_dim(const mp_game* game, int* out) {
    return wrap([&] {
        if (!game || !out) raise(ErrorCode::InvalidArgument, "null argument");
        *out = game->instance.space().ambient_dim();
    });
}

mp_status mp_game_effective_dim(const mp_game* game, int* out) {
    return wrap([&] {
        if (!game || !out) raise(ErrorCode::InvalidArgument, "null argument");
        *out = game->instance.space().effective_dim();
    });
}

mp_status mp_game_class(const mp_game* game, char** out) {
    return wrap([&] {
        if (!game || !out) raise(ErrorCode::InvalidArgument, "null argument");
        *out = dup_string(game_class_name(game->instance.game_class()));
    });
}

mp_status mp_game_type_id(const mp_game* game, int index, char** out) {
    return wrap([&] {
        if (!game || !out) raise(ErrorCode::InvalidArgument, "null argument");
        if (index < 0 || index >= game->instance.num_types())
            raise(ErrorCode::IndexOutOfRange, "type index out of range");
        *out = dup_string(game->instance.types()[index].id);
    });
}

mp_status mp_game_check(const mp_game* game, char** report_json_out, int* all_ok_out) {
    return wrap([&] {
        if (!game) raise(ErrorCode::InvalidArgument, "null argument");
        const auto rep = learn::check_applicable(game->instance);
        if (report_json_out) *report_json_out = dup_string(learn::assumption_report_to_json(rep).dump(2));
        if (all_ok_out) *all_ok_out = rep.all_ok() ? 1 : 0;
    });
}

mp_status mp_agent_new(const mp_game* game, const char* type_id, mp_agent** agent_out) {
    return wrap([&] {
        if (!game || !type_id || !agent_out) raise(ErrorCode::InvalidArgument, "null argument");
        const AgentType& t = game->instance.type_by_id(type_id);
        *agent_out = new mp_agent{SimulatedAgent(game->instance.space(), t), t.id};
    });
}

void mp_agent_free(mp_agent* agent) { delete agent; }

mp_status mp_run_learner(const mp_game* game, mp_agent* agent, const char* learner,
                         const char* options_json, char** result_json_out) {
    return wrap([&] {
        if (!game || !agent || !learner || !result_json_out)
            raise(ErrorCode::InvalidArgument, "null argument");
        const json options = parse_or_empty(options_json);
        const uint64_t seed = options.value("seed", static_cast<uint64_t>(0));
        const std::string which = learner;
        json result;
        if (which == "single-round") {
            result = learn::identify_result_to_json(
                "single-round", learn::single_round_identify(game->instance, agent->simulated, seed));
        } else if (which == "menu") {
            result = learn::identify_result_to_json("menu",
                                                    learn::learn_via_menu(game->instance, agent->simulated));
        } else if (which == "single-strategy") {
            result = learn::identify_result_to_json(
                "single-strategy", learn::learn_via_single_strategy(game->instance, agent->simulated));
        } else if (which == "infinite") {
            const int bits = options.value("precision_bits", 40);
            const long oracle_probes = options.value("oracle_probes", 20000L);
            const auto strategies = learn::sample_action_strategies(
                agent->simulated.type(), game->instance.space(), oracle_probes, mix_seed(seed, 0x04ac1e));
            const auto oracle = learn::OracleStrategies::validated(agent->simulated, strategies);
            result = learn::reconstruction_result_to_json(
                "infinite", learn::learn_infinite_type(agent->simulated, oracle, game->instance.space(),
                                                       bits, mix_seed(seed, 0x1f1)));
        } else {
            raise(ErrorCode::InvalidArgument, "unknown learner '" + which + "'");
        }
        *result_json_out = dup_string(result.dump(2));
    });
}

mp_status mp_run_hardness_menu(const mp_game* game, const char* menu_json, mp_agent* agent,
                               char** result_json_out) {
    return wrap([&] {
        if (!game || !menu_json || !agent || !result_json_out)
            raise(ErrorCode::InvalidArgument, "null argument");
        const json meta = game->instance.metadata();
        if (!meta.contains("hardness"))
            raise(ErrorCode::InvalidArgument, "game does not carry hardness metadata");
        games::HardnessExample h{game->instance, menu_from_json(parse_json(menu_json)),
                                 game->instance.num_actions() - 1};
        const auto res = games::identify_via_hardness_menu(h, agent->simulated);
        *result_json_out = dup_string(learn::identify_result_to_json("hardness-menu", res).dump(2));
    });
}

mp_status mp_equivalence(const mp_game* game, const char* type_id, const char* reconstruction_json,
                         long probes, double margin_floor, uint64_t seed, int* equivalent_out,
                         double* disagreement_rate_out) {
    return wrap([&] {
        if (!game || !type_id || !reconstruction_json) raise(ErrorCode::InvalidArgument, "null argument");
        const auto recon = learn::reconstruction_from_json(parse_json(reconstruction_json));
        const auto res = learn::behaviorally_equivalent(recon, game->instance.type_by_id(type_id),
                                                        game->instance.space(), probes, margin_floor, seed);
        if (equivalent_out) *equivalent_out = res.equivalent ? 1 : 0;
        if (disagreement_rate_out) *disagreement_rate_out = res.disagreement_rate;
    });
}

} // extern "C"
