// Experiment harness for the menuprobe library: generate instances, run
// learners against simulated agents, check assumptions, and sweep benchmark
// grids into CSV summaries. Talks to the library exclusively through the C
// API in menuprobe/menuprobe.h.
//
// Exit codes: 0 success, 1 wrong answer / failed assumption, 2 precondition
// gate or usage error.

#include <menuprobe/menuprobe.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitWrong = 1;
constexpr int kExitGate = 2;

struct GameDeleter {
    void operator()(mp_game* g) const { mp_game_free(g); }
};
struct AgentDeleter {
    void operator()(mp_agent* a) const { mp_agent_free(a); }
};
using GamePtr = std::unique_ptr<mp_game, GameDeleter>;
using AgentPtr = std::unique_ptr<mp_agent, AgentDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    mp_string_free(s);
    return out;
}

[[noreturn]] void die(const std::string& msg, int code = kExitGate) {
    std::cerr << "menuprobe: " << msg << "\n";
    std::exit(code);
}

void require_ok(mp_status st, const std::string& context) {
    if (st != MP_OK)
        die(context + ": " + mp_status_name(st) + " (" + mp_last_error() + ")",
            st == MP_ERR_IO || st == MP_ERR_PARSE ? kExitGate : kExitGate);
}

uint64_t mix(uint64_t seed, uint64_t a, uint64_t b = 0) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xc2b2ae3d27d4eb4fULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t env_fallback_seed() {
    if (const char* env = std::getenv("MENUPROBE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) die("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        die("parse error in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) die("cannot open '" + path + "' for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

GamePtr generate_game(const std::string& cls, const json& params, uint64_t seed, std::string* menu_json) {
    mp_game* g = nullptr;
    if (cls == "hardness") {
        char* menu = nullptr;
        require_ok(mp_hardness_build(params.value("m", 4), params.value("N", 0), &g, &menu), "hardness");
        if (menu_json) *menu_json = take_string(menu);
        else mp_string_free(menu);
    } else {
        require_ok(mp_game_generate(cls.c_str(), params.dump().c_str(), seed, &g), "generate");
    }
    return GamePtr(g);
}

GamePtr load_game(const std::string& path) {
    const json j = load_json_file(path);
    mp_game* g = nullptr;
    require_ok(mp_game_from_json(j.dump().c_str(), &g), "load game");
    return GamePtr(g);
}

void print_assumption_report(const mp_game* game) {
    char* report = nullptr;
    int ok = 0;
    require_ok(mp_game_check(game, &report, &ok), "check");
    const json rep = json::parse(take_string(report));
    auto show = [&](const char* key, const char* label) {
        const auto& v = rep.at(key);
        if (v.is_null()) return;
        std::cout << "  " << label << ": " << (v.get<bool>() ? "ok" : "VIOLATED") << "\n";
    };
    std::cout << "assumption report:\n";
    show("nonparallel_ok", "non-parallel gradients");
    show("no_dominant_ok", "no dominant action");
    show("breakpoints_ok", "no shared breakpoints");
    const auto& violations = rep.at("violations");
    size_t shown = 0;
    for (const auto& v : violations) {
        if (shown++ == 8) {
            std::cout << "    ... " << (violations.size() - 8) << " more\n";
            break;
        }
        std::cout << "    - assumption " << v.at("assumption").get<int>() << ": "
                  << v.at("detail").get<std::string>() << " [" << v.at("type_a").get<std::string>()
                  << (v.at("type_b").get<std::string>().empty()
                          ? std::string()
                          : ", " + v.at("type_b").get<std::string>())
                  << "]\n";
    }
}

// ---------------------------------------------------------------- gen ----

int cmd_gen(const std::string& cls, const json& params, uint64_t seed, const std::string& out_path,
            const std::string& menu_out) {
    std::string menu_json;
    GamePtr game = generate_game(cls, params, seed, &menu_json);

    char* text = nullptr;
    require_ok(mp_game_to_json(game.get(), &text), "serialize");
    write_text_file(out_path, take_string(text));
    std::cout << "wrote " << out_path << "\n";
    if (!menu_json.empty()) {
        const std::string path = menu_out.empty() ? out_path + ".menu.json" : menu_out;
        write_text_file(path, json::parse(menu_json).dump(2));
        std::cout << "wrote " << path << "\n";
    }

    int eff = 0, types = 0;
    require_ok(mp_game_effective_dim(game.get(), &eff), "dims");
    require_ok(mp_game_num_types(game.get(), &types), "types");
    if (eff == 1 && types > 2)
        std::cout << "warning: effective dimension 1 with more than two types; no single "
                     "finite menu can identify the type in one round\n";
    print_assumption_report(game.get());
    return kExitOk;
}

// ---------------------------------------------------------------- run ----

struct RunOutcome {
    bool gate_failed = false;
    bool correct = false;
    int rounds = 0;
    std::string result_json;
    std::string gate_message;
};

RunOutcome run_one(const mp_game* game, const std::string& true_type, const std::string& learner,
                   uint64_t seed, int precision_bits, const std::string& menu_json) {
    RunOutcome out;
    mp_agent* agent_raw = nullptr;
    require_ok(mp_agent_new(game, true_type.c_str(), &agent_raw), "agent");
    AgentPtr agent(agent_raw);

    char* result = nullptr;
    mp_status st;
    if (learner == "hardness-menu") {
        if (menu_json.empty()) die("--menu is required for the hardness-menu learner");
        st = mp_run_hardness_menu(game, menu_json.c_str(), agent.get(), &result);
    } else {
        const json options{{"seed", seed}, {"precision_bits", precision_bits}};
        st = mp_run_learner(game, agent.get(), learner.c_str(), options.dump().c_str(), &result);
    }
    if (st != MP_OK) {
        out.gate_failed = true;
        out.gate_message = std::string(mp_status_name(st)) + ": " + mp_last_error();
        return out;
    }
    out.result_json = take_string(result);
    const json rj = json::parse(out.result_json);
    out.rounds = rj.at("rounds").get<int>();
    if (rj.contains("identified_type")) {
        out.correct = rj.at("identified_type").get<std::string>() == true_type;
    } else {
        int equivalent = 0;
        double rate = 0.0;
        const mp_status eq =
            mp_equivalence(game, true_type.c_str(), rj.at("reconstruction").dump().c_str(), 20000, 1e-5,
                           mix(seed, 0xe91), &equivalent, &rate);
        if (eq != MP_OK) {
            out.gate_failed = true;
            out.gate_message = std::string(mp_status_name(eq)) + ": " + mp_last_error();
            return out;
        }
        out.correct = equivalent == 1;
    }
    return out;
}

int cmd_run(const std::string& game_path, const std::string& true_type, const std::string& learner,
            uint64_t seed, int precision_bits, const std::string& menu_path, const std::string& out_path) {
    GamePtr game = load_game(game_path);
    std::string menu_json;
    if (!menu_path.empty()) menu_json = load_json_file(menu_path).dump();

    const RunOutcome out = run_one(game.get(), true_type, learner, seed, precision_bits, menu_json);
    if (out.gate_failed) {
        std::cerr << "gate failure: " << out.gate_message << "\n";
        return kExitGate;
    }
    if (!out_path.empty()) {
        write_text_file(out_path, out.result_json);
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << out.result_json << "\n";
    }
    std::cout << "rounds: " << out.rounds << ", identified "
              << (out.correct ? "correctly" : "WRONGLY") << "\n";
    return out.correct ? kExitOk : kExitWrong;
}

// -------------------------------------------------------------- bench ----

struct BenchRow {
    std::string cls;
    int m = 0, n = 0, big_k = 0;
    std::string learner;
    int trials = 0;
    double mean_rounds = 0.0;
    int max_rounds = 0;
    double accuracy = 0.0;
    long wall_ms = 0;
};

bool learner_supports(const std::string& learner, const std::string& cls, int m) {
    if (learner == "single-round")
        return (cls == "stackelberg" && m >= 3) || cls == "contract" || cls == "info_acq";
    if (learner == "menu") return cls == "generic" || (cls == "stackelberg" && m == 2);
    if (learner == "single-strategy")
        return cls == "generic" || (cls == "stackelberg" && m == 2) || cls == "security";
    if (learner == "infinite") return cls == "contract" || cls == "info_acq";
    if (learner == "hardness-menu") return cls == "hardness";
    return false;
}

int cmd_bench(const json& config, const std::string& out_path) {
    const uint64_t seed = config.value("seed", env_fallback_seed());
    const int trials = config.value("trials", 3);
    const int precision_bits = config.value("precision_bits", 40);
    const bool timing = config.value("timing", false);
    auto as_list = [&](const char* key, std::vector<int> dflt) {
        if (!config.contains(key)) return dflt;
        if (config.at(key).is_array()) return config.at(key).get<std::vector<int>>();
        return std::vector<int>{config.at(key).get<int>()};
    };
    std::vector<std::string> classes = {"stackelberg", "contract", "generic"};
    if (config.contains("classes")) classes = config.at("classes").get<std::vector<std::string>>();
    std::vector<std::string> learners = {"single-round", "menu", "single-strategy"};
    if (config.contains("learners")) learners = config.at("learners").get<std::vector<std::string>>();
    const auto ms = as_list("m", {3});
    const auto ns = as_list("n", {3});
    const auto ks = as_list("K", {4});
    const auto rs = as_list("r", {1});

    std::vector<BenchRow> rows;
    uint64_t combo = 0;
    for (const auto& cls : classes)
        for (int m : ms)
            for (int n : ns)
                for (int big_k : ks)
                    for (const auto& learner : learners) {
                        ++combo;
                        if (!learner_supports(learner, cls, m)) continue;
                        BenchRow row{cls, m, n, big_k, learner, trials, 0, 0, 0, 0};
                        long total_rounds = 0, total_runs = 0, correct = 0;
                        const auto t0 = std::chrono::steady_clock::now();
                        for (int trial = 0; trial < trials; ++trial) {
                            // resample the instance when a random draw violates
                            // the learner's assumptions
                            GamePtr game;
                            std::string menu_json;
                            bool usable = false;
                            for (int attempt = 0; attempt < 100 && !usable; ++attempt) {
                                const uint64_t s = mix(seed, combo, trial * 101 + attempt);
                                json params{{"m", m},          {"n", n},
                                            {"K", big_k},      {"r", rs[0]},
                                            {"N", 0},          {"variant", "slice"}};
                                game = generate_game(cls, params, s, &menu_json);
                                if (learner == "single-round" || learner == "hardness-menu" ||
                                    learner == "infinite" || cls == "generic") {
                                    usable = true;
                                    continue;
                                }
                                // d=1 learners: the instance must clear the
                                // dominance (and, for single-strategy, the
                                // shared-breakpoint) assumptions
                                char* rep_raw = nullptr;
                                require_ok(mp_game_check(game.get(), &rep_raw, nullptr), "check");
                                const json rep = json::parse(take_string(rep_raw));
                                const auto pass = [&](const char* key) {
                                    return rep.at(key).is_boolean() && rep.at(key).get<bool>();
                                };
                                usable = pass("no_dominant_ok") &&
                                         (learner != "single-strategy" || pass("breakpoints_ok"));
                            }
                            if (!usable) continue;
                            int types = 0;
                            require_ok(mp_game_num_types(game.get(), &types), "types");
                            for (int k = 0; k < types; ++k) {
                                char* id_raw = nullptr;
                                require_ok(mp_game_type_id(game.get(), k, &id_raw), "type id");
                                const std::string id = take_string(id_raw);
                                const RunOutcome out = run_one(game.get(), id, learner,
                                                               mix(seed, combo * 131 + trial, k),
                                                               precision_bits, menu_json);
                                if (out.gate_failed) continue;
                                ++total_runs;
                                total_rounds += out.rounds;
                                row.max_rounds = std::max(row.max_rounds, out.rounds);
                                if (out.correct) ++correct;
                            }
                        }
                        const auto t1 = std::chrono::steady_clock::now();
                        if (total_runs == 0) {
                            std::cerr << "bench: no successful runs for " << cls << "/" << learner
                                      << ", row skipped\n";
                            continue;
                        }
                        row.mean_rounds = static_cast<double>(total_rounds) / total_runs;
                        row.accuracy = static_cast<double>(correct) / total_runs;
                        row.wall_ms =
                            timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                                   : 0;
                        rows.push_back(std::move(row));
                    }

    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.cls, a.m, a.n, a.big_k, a.learner) < std::tie(b.cls, b.m, b.n, b.big_k, b.learner);
    });
    std::ostringstream csv;
    csv << "class,m,n,K,learner,trials,mean_rounds,max_rounds,accuracy,wall_ms\n";
    for (const auto& r : rows) {
        csv << r.cls << "," << r.m << "," << r.n << "," << r.big_k << "," << r.learner << "," << r.trials
            << "," << r.mean_rounds << "," << r.max_rounds << "," << r.accuracy << "," << r.wall_ms << "\n";
    }
    if (!out_path.empty()) {
        write_text_file(out_path, csv.str());
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << csv.str();
    }
    return kExitOk;
}

// -------------------------------------------------------------- check ----

int cmd_check(const std::string& game_path, const std::string& json_out,
              const std::string& assumptions) {
    GamePtr game = load_game(game_path);
    char* report = nullptr;
    int ok = 0;
    require_ok(mp_game_check(game.get(), &report, &ok), "check");
    const std::string report_text = take_string(report);
    print_assumption_report(game.get());
    if (!json_out.empty()) {
        write_text_file(json_out, report_text);
        std::cout << "wrote " << json_out << "\n";
    }
    if (assumptions.empty()) return ok == 1 ? kExitOk : kExitWrong;

    // verdict restricted to the requested assumption numbers, e.g. "2,3"
    const json rep = json::parse(report_text);
    bool all_requested_ok = true;
    std::stringstream ss(assumptions);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const char* key = item == "1"   ? "nonparallel_ok"
                          : item == "2" ? "no_dominant_ok"
                          : item == "3" ? "breakpoints_ok"
                                        : nullptr;
        if (!key) die("unknown assumption '" + item + "' (expected 1, 2 or 3)");
        const auto& flag = rep.at(key);
        if (flag.is_null())
            die("assumption " + item + " is not applicable to this game's effective dimension");
        if (!flag.get<bool>()) all_requested_ok = false;
    }
    return all_requested_ok ? kExitOk : kExitWrong;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"menuprobe: type elicitation in principal-agent games via menus of strategies"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "JSON config; command-line flags override its fields")
        ->check(CLI::ExistingFile);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a game instance file");
    std::string gen_class = "stackelberg", gen_out = "game.json", gen_menu_out;
    int gen_m = 3, gen_n = 3, gen_k = 2, gen_r = 1, gen_nw = 2, gen_no = 2, gen_big_n = 0;
    double gen_pay_cap = 1.0;
    std::string gen_variant = "slice";
    uint64_t gen_seed = 0;
    bool gen_seed_set = false;
    gen->add_option("--class", gen_class,
                    "stackelberg | security | contract | info_acq | generic | hardness");
    gen->add_option("--m", gen_m, "leader actions / outcomes / hardness size");
    gen->add_option("--n", gen_n, "agent actions / security targets");
    gen->add_option("--K", gen_k, "number of types");
    gen->add_option("--r", gen_r, "security resources");
    gen->add_option("--nw", gen_nw, "information-acquisition states");
    gen->add_option("--no", gen_no, "information-acquisition observations");
    gen->add_option("--N", gen_big_n, "hardness constant (default 10*m)");
    gen->add_option("--pay-cap", gen_pay_cap, "contract payment cap");
    gen->add_option("--variant", gen_variant, "security: slice | full");
    gen->add_option("--seed", gen_seed, "RNG seed (fallback: MENUPROBE_SEED)")
        ->each([&](const std::string&) { gen_seed_set = true; });
    gen->add_option("--out", gen_out, "output game file");
    gen->add_option("--menu-out", gen_menu_out, "output menu file (hardness)");

    // run
    auto* run = app.add_subcommand("run", "run one learner against a simulated agent");
    std::string run_game, run_type, run_learner = "single-round", run_menu, run_out;
    uint64_t run_seed = 0;
    bool run_seed_set = false;
    int run_bits = 40;
    run->add_option("--game", run_game, "game instance file")->required()->check(CLI::ExistingFile);
    run->add_option("--true-type", run_type, "ground-truth type id")->required();
    run->add_option("--learner", run_learner,
                    "single-round | menu | single-strategy | infinite | hardness-menu");
    run->add_option("--menu", run_menu, "menu file for hardness-menu")->check(CLI::ExistingFile);
    run->add_option("--seed", run_seed, "RNG seed (fallback: MENUPROBE_SEED)")
        ->each([&](const std::string&) { run_seed_set = true; });
    run->add_option("--precision-bits", run_bits, "bisection precision L");
    run->add_option("--out", run_out, "write the learner result JSON here");

    // bench
    auto* bench = app.add_subcommand(
        "bench",
        "sweep a (class, sizes, K, learner) grid over trial seeds, running every type as ground "
        "truth, and emit a CSV summary with the columns "
        "class,m,n,K,learner,trials,mean_rounds,max_rounds,accuracy,wall_ms");
    std::string bench_out;
    std::vector<std::string> bench_classes, bench_learners;
    std::vector<int> bench_m, bench_n, bench_k;
    int bench_trials = 0, bench_r = 0, bench_bits = 0;
    uint64_t bench_seed = 0;
    bool bench_seed_set = false, bench_timing = false;
    bench->add_option("--class", bench_classes, "game classes to sweep");
    bench->add_option("--learner", bench_learners, "learners to sweep");
    bench->add_option("--m", bench_m, "leader action counts");
    bench->add_option("--n", bench_n, "agent action counts");
    bench->add_option("--K", bench_k, "type-set sizes");
    bench->add_option("--r", bench_r, "security resources");
    bench->add_option("--trials", bench_trials, "instances per grid cell");
    bench->add_option("--seed", bench_seed, "base seed (fallback: MENUPROBE_SEED)")
        ->each([&](const std::string&) { bench_seed_set = true; });
    bench->add_option("--precision-bits", bench_bits, "bisection precision L");
    bench->add_flag("--timing", bench_timing, "record wall-clock times (breaks byte-identical output)");
    bench->add_option("--out", bench_out, "CSV output path (default: stdout)");

    // check
    auto* check = app.add_subcommand("check", "run assumption validators on a game file");
    std::string check_game, check_json_out, check_assumptions;
    check->add_option("--game", check_game, "game instance file")->required()->check(CLI::ExistingFile);
    check->add_option("--json-out", check_json_out, "write the report JSON here");
    check->add_option("--assumptions", check_assumptions,
                      "comma-separated subset to gate on, e.g. 2,3 (default: all applicable)");

    CLI11_PARSE(app, argc, argv);

    json config = json::object();
    if (!config_path.empty()) config = load_json_file(config_path);

    try {
        if (gen->parsed()) {
            json params{{"m", gen_m},     {"n", gen_n},             {"K", gen_k},
                        {"r", gen_r},     {"nw", gen_nw},           {"no", gen_no},
                        {"N", gen_big_n}, {"pay_cap", gen_pay_cap}, {"variant", gen_variant}};
            // config supplies whatever the flags did not
            const std::pair<const char*, const char*> merges[] = {
                {"m", "--m"},   {"n", "--n"},   {"K", "--K"},
                {"r", "--r"},   {"nw", "--nw"}, {"no", "--no"},
                {"N", "--N"},   {"pay_cap", "--pay-cap"}, {"variant", "--variant"}};
            for (const auto& [key, flag] : merges)
                if (config.contains(key) && gen->get_option(flag)->count() == 0) params[key] = config.at(key);
            uint64_t seed = gen_seed_set ? gen_seed : config.value("seed", env_fallback_seed());
            const std::string cls = gen->get_option("--class")->count() > 0
                                        ? gen_class
                                        : config.value("class", gen_class);
            return cmd_gen(cls, params, seed, gen_out, gen_menu_out);
        }
        if (run->parsed()) {
            const uint64_t seed = run_seed_set ? run_seed : config.value("seed", env_fallback_seed());
            const int bits = run->get_option("--precision-bits")->count() > 0
                                 ? run_bits
                                 : config.value("precision_bits", run_bits);
            return cmd_run(run_game, run_type, run_learner, seed, bits, run_menu, run_out);
        }
        if (bench->parsed()) {
            // flags override config fields
            if (!bench_classes.empty()) config["classes"] = bench_classes;
            if (!bench_learners.empty()) config["learners"] = bench_learners;
            if (!bench_m.empty()) config["m"] = bench_m;
            if (!bench_n.empty()) config["n"] = bench_n;
            if (!bench_k.empty()) config["K"] = bench_k;
            if (bench_r > 0) config["r"] = bench_r;
            if (bench_trials > 0) config["trials"] = bench_trials;
            if (bench_seed_set) config["seed"] = bench_seed;
            if (bench_bits > 0) config["precision_bits"] = bench_bits;
            if (bench_timing) config["timing"] = true;
            return cmd_bench(config, bench_out);
        }
        if (check->parsed()) return cmd_check(check_game, check_json_out, check_assumptions);
    } catch (const std::exception& e) {
        die(e.what());
    }
    return kExitGate;
}
