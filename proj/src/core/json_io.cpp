#include "json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "../error.hpp"

namespace menuprobe {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) { return json(v); }

Vec vec_from_json(const json& j) {
    if (!j.is_array()) raise(ErrorCode::Parse, "expected array of numbers");
    return j.get<Vec>();
}

} // namespace

json game_to_json(const GameInstance& game) {
    const StrategySpace& s = game.space();
    json j;
    j["ambient_dim"] = s.ambient_dim();
    j["effective_dim"] = s.effective_dim();
    j["chart_matrix"] = s.chart_matrix().data; // row-major m x d
    j["chart_offset"] = vec_to_json(s.chart_offset());
    j["box_lo"] = vec_to_json(s.box_lo());
    j["box_hi"] = vec_to_json(s.box_hi());
    json cons = json::array();
    for (const auto& c : s.constraints()) cons.push_back(json{{"g", c.g}, {"h", c.h}});
    j["param_constraints"] = cons;
    json types = json::array();
    for (const auto& t : game.types()) {
        json tj;
        tj["id"] = t.id;
        tj["directions"] = t.directions;
        tj["intercepts"] = vec_to_json(t.intercepts);
        types.push_back(tj);
    }
    j["types"] = types;
    j["class"] = game_class_name(game.game_class());
    j["metadata"] = game.metadata();
    return j;
}

GameInstance game_from_json(const json& j) {
    try {
        const int m = j.at("ambient_dim").get<int>();
        const int d = j.at("effective_dim").get<int>();
        Mat chart(m, d);
        chart.data = j.at("chart_matrix").get<std::vector<double>>();
        if (static_cast<int>(chart.data.size()) != m * d)
            raise(ErrorCode::Parse, "chart_matrix length != ambient_dim * effective_dim");
        Vec offset = vec_from_json(j.at("chart_offset"));
        Vec lo = vec_from_json(j.at("box_lo"));
        Vec hi = vec_from_json(j.at("box_hi"));
        std::vector<LinearConstraint> cons;
        for (const auto& cj : j.at("param_constraints"))
            cons.push_back(LinearConstraint{vec_from_json(cj.at("g")), cj.at("h").get<double>()});
        StrategySpace space(std::move(chart), std::move(offset), std::move(lo), std::move(hi), std::move(cons));
        std::vector<AgentType> types;
        for (const auto& tj : j.at("types")) {
            AgentType t;
            t.id = tj.at("id").get<std::string>();
            t.directions = tj.at("directions").get<std::vector<Vec>>();
            t.intercepts = vec_from_json(tj.at("intercepts"));
            types.push_back(std::move(t));
        }
        GameClass cls = game_class_from_name(j.at("class").get<std::string>());
        json meta = j.contains("metadata") ? j.at("metadata") : json::object();
        return GameInstance(std::move(space), std::move(types), cls, std::move(meta));
    } catch (const json::exception& e) {
        raise(ErrorCode::Parse, std::string("game_from_json: ") + e.what());
    }
}

json menu_to_json(const Menu& menu) {
    json j;
    if (menu.is_finite()) {
        json items = json::array();
        for (const auto& it : menu.as_finite().items) items.push_back(it.coords);
        j["finite_items"] = items;
    } else {
        const auto& b = menu.as_ball();
        j["ball"] = json{{"center", b.center}, {"radius", b.radius}};
    }
    return j;
}

Menu menu_from_json(const json& j) {
    try {
        if (j.contains("finite_items")) {
            std::vector<Strategy> items;
            for (const auto& ij : j.at("finite_items")) items.push_back(Strategy{vec_from_json(ij)});
            return Menu::finite(std::move(items));
        }
        if (j.contains("ball")) {
            const auto& bj = j.at("ball");
            return Menu::ball(vec_from_json(bj.at("center")), bj.at("radius").get<double>());
        }
    } catch (const json::exception& e) {
        raise(ErrorCode::Parse, std::string("menu_from_json: ") + e.what());
    }
    raise(ErrorCode::Parse, "menu_from_json: neither finite_items nor ball present");
}

json transcript_to_json(const Transcript& t) {
    json rounds = json::array();
    for (const auto& r : t.rounds) {
        rounds.push_back(json{{"menu", menu_to_json(r.menu)}, {"chosen", r.chosen.coords}, {"response", r.response}});
    }
    return rounds;
}

Transcript transcript_from_json(const json& j) {
    Transcript t;
    try {
        for (const auto& rj : j) {
            Round r;
            r.menu = menu_from_json(rj.at("menu"));
            r.chosen = Strategy{vec_from_json(rj.at("chosen"))};
            r.response = rj.at("response").get<int>();
            t.rounds.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        raise(ErrorCode::Parse, std::string("transcript_from_json: ") + e.what());
    }
    return t;
}

std::string write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) raise(ErrorCode::Io, "write failed for '" + path + "'");
    return path;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::Io, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        raise(ErrorCode::Parse, std::string("parse error in '") + path + "': " + e.what());
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        raise(ErrorCode::Parse, std::string("JSON parse error: ") + e.what());
    }
}

} // namespace menuprobe
