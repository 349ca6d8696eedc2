#include "serialize.hpp"

#include <json.hpp>

#include "../core/json_io.hpp"
#include "../error.hpp"

namespace menuprobe::learn {

using nlohmann::json;

json identify_result_to_json(const char* algorithm, const IdentifyResult& r) {
    json j;
    j["algorithm"] = algorithm;
    j["identified_type"] = r.type_id;
    j["rounds"] = r.transcript.round_count();
    j["transcript"] = transcript_to_json(r.transcript);
    j["assumption_report"] = assumption_report_to_json(r.assumptions);
    return j;
}

json reconstruction_result_to_json(const char* algorithm, const ReconstructionResult& r) {
    json j;
    j["algorithm"] = algorithm;
    j["reconstruction"] = reconstruction_to_json(r.reconstruction);
    j["rounds"] = r.transcript.round_count();
    j["transcript"] = transcript_to_json(r.transcript);
    j["assumption_report"] = nullptr;
    return j;
}

json reconstruction_to_json(const ReconstructedType& r) {
    json actions = json::array();
    for (const auto& a : r.actions)
        actions.push_back(json{{"direction", a.direction},
                               {"scale", a.scale},
                               {"intercept", a.intercept},
                               {"resolved", a.resolved}});
    return json{{"reference_action", r.reference_action},
                {"precision_bits", r.precision_bits},
                {"actions", actions}};
}

ReconstructedType reconstruction_from_json(const json& j) {
    ReconstructedType r;
    try {
        r.reference_action = j.at("reference_action").get<int>();
        r.precision_bits = j.at("precision_bits").get<int>();
        for (const auto& aj : j.at("actions")) {
            ReconstructedAction a;
            a.direction = aj.at("direction").get<Vec>();
            a.scale = aj.at("scale").get<double>();
            a.intercept = aj.at("intercept").get<double>();
            a.resolved = aj.at("resolved").get<bool>();
            r.actions.push_back(std::move(a));
        }
    } catch (const json::exception& e) {
        raise(ErrorCode::Parse, std::string("reconstruction_from_json: ") + e.what());
    }
    return r;
}

} // namespace menuprobe::learn
