#pragma once

#include <string>

#include <json.hpp>

#include "types.hpp"

namespace menuprobe {

// GameInstance document:
//   {"ambient_dim", "effective_dim", "chart_matrix" (row-major flat array),
//    "chart_offset", "box_lo", "box_hi", "param_constraints": [{"g": [...], "h": v}],
//    "types": [{"id", "directions": [[...]], "intercepts": [...]}],
//    "class": "stackelberg"|"security"|"contract"|"info_acq"|"generic",
//    "metadata": {}}
nlohmann::json game_to_json(const GameInstance& game);
GameInstance game_from_json(const nlohmann::json& j);

// Menu: {"finite_items": [[...], ...]} or {"ball": {"center": [...], "radius": r}}
nlohmann::json menu_to_json(const Menu& menu);
Menu menu_from_json(const nlohmann::json& j);

// Transcript: JSON array of rounds [{"menu": ..., "chosen": [...], "response": j}]
nlohmann::json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);

std::string write_json_file(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json_file(const std::string& path);
nlohmann::json parse_json(const std::string& text);

} // namespace menuprobe
