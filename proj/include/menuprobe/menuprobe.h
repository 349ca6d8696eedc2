/* menuprobe: simulation and learning for principal-agent games where the
 * principal identifies the agent's private type from revealed preferences
 * over posted menus of strategies.
 *
 * C API of the shared library. Handles are opaque; every function returns an
 * mp_status and writes results through out-parameters. Strings returned
 * through char** are heap-allocated and must be released with
 * mp_string_free(). mp_last_error() describes the most recent failure on the
 * calling thread. Structured inputs and outputs (game files, menus, learner
 * results, assumption reports) are JSON documents; the schemas are described
 * in the project README.
 */
#ifndef MENUPROBE_H
#define MENUPROBE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
    MP_OK = 0,
    MP_ERR_INVALID_ARGUMENT = 1,
    MP_ERR_DIMENSION_MISMATCH = 2,
    MP_ERR_INDEX_OUT_OF_RANGE = 3,
    MP_ERR_EMPTY_MENU = 4,
    MP_ERR_BALL_OUTSIDE_SPACE = 5,
    MP_ERR_INFEASIBLE_POINT = 6,
    MP_ERR_DEGENERATE_INSTANCE = 7,
    MP_ERR_ASSUMPTION_VIOLATED = 8,
    MP_ERR_AMBIGUOUS_MATCH = 9,
    MP_ERR_NO_MATCH = 10,
    MP_ERR_EQUAL_RESPONSES = 11,
    MP_ERR_DEGENERATE_SPREAD = 12,
    MP_ERR_NONPOSITIVE_SCALE = 13,
    MP_ERR_COUNT_JUMP = 14,
    MP_ERR_INDISTINGUISHABLE_TYPES = 15,
    MP_ERR_REGION_NOT_INTERIOR = 16,
    MP_ERR_PARTIAL_RESULT = 17,
    MP_ERR_PARSE = 18,
    MP_ERR_IO = 19,
    MP_ERR_UNKNOWN_TYPE = 20,
    MP_ERR_INTERNAL = 21
} mp_status;

/* A game instance: strategy space, finite type set, class, metadata. */
typedef struct mp_game mp_game;
/* A simulated ground-truth agent bound to one type of a game. */
typedef struct mp_agent mp_agent;

const char* mp_version(void);
const char* mp_status_name(mp_status status);
/* Message for the last failing call on this thread; empty if none. */
const char* mp_last_error(void);
void mp_string_free(char* s);

/* Generates an instance. game_class is one of "stackelberg", "security",
 * "contract", "info_acq", "generic". params_json supplies the sizes:
 *   {"m": leader actions / outcomes, "n": agent actions, "K": type count,
 *    "r": security resources, "nw"/"no": states/observations,
 *    "pay_cap": contract payment cap, "variant": "slice"|"full" (security)}
 * Unused keys are ignored; params_json may be NULL for all-defaults. */
mp_status mp_game_generate(const char* game_class, const char* params_json, uint64_t seed,
                           mp_game** game_out);

/* The exponential-hardness Stackelberg family plus its identifying menu.
 * big_n <= 0 selects the default 10*m. */
mp_status mp_hardness_build(int m, int big_n, mp_game** game_out, char** menu_json_out);

mp_status mp_game_from_json(const char* json, mp_game** game_out);
mp_status mp_game_to_json(const mp_game* game, char** json_out);
void mp_game_free(mp_game* game);

mp_status mp_game_num_types(const mp_game* game, int* out);
mp_status mp_game_num_actions(const mp_game* game, int* out);
mp_status mp_game_ambient_dim(const mp_game* game, int* out);
mp_status mp_game_effective_dim(const mp_game* game, int* out);
mp_status mp_game_class(const mp_game* game, char** out);
mp_status mp_game_type_id(const mp_game* game, int index, char** out);

/* Runs every assumption check applicable to the game's dimensionality and
 * returns the report as JSON; all_ok_out (optional) is 1 iff none failed. */
mp_status mp_game_check(const mp_game* game, char** report_json_out, int* all_ok_out);

mp_status mp_agent_new(const mp_game* game, const char* type_id, mp_agent** agent_out);
void mp_agent_free(mp_agent* agent);

/* Runs a learner against the agent. learner is one of "single-round",
 * "menu", "single-strategy", "infinite". options_json (may be NULL):
 *   {"seed": u64, "precision_bits": int (infinite, default 40),
 *    "oracle_probes": int (infinite; samples used to realise the
 *    action-informed oracle from the simulated agent, default 20000)}
 * The result JSON holds {"algorithm", "identified_type" | "reconstruction",
 * "rounds", "transcript", "assumption_report"}. Precondition failures
 * (dimension gates, assumption violations) come back as the corresponding
 * error status with no result. */
mp_status mp_run_learner(const mp_game* game, mp_agent* agent, const char* learner,
                         const char* options_json, char** result_json_out);

/* Posts a hardness menu (JSON with "finite_items") once and identifies the
 * type from the observed (choice, response). */
mp_status mp_run_hardness_menu(const mp_game* game, const char* menu_json, mp_agent* agent,
                               char** result_json_out);

/* Compares a reconstruction (the "reconstruction" object of an "infinite"
 * result) against a game type behaviorally over sampled strategies. */
mp_status mp_equivalence(const mp_game* game, const char* type_id, const char* reconstruction_json,
                         long probes, double margin_floor, uint64_t seed, int* equivalent_out,
                         double* disagreement_rate_out);

#ifdef __cplusplus
}
#endif

#endif /* MENUPROBE_H */
