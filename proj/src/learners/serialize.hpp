#pragma once

#include <json.hpp>

#include "equivalence.hpp"
#include "single_round.hpp"

namespace menuprobe::learn {

// Learner output document:
//   {"algorithm", "identified_type" | "reconstruction", "rounds",
//    "transcript", "assumption_report"}
nlohmann::json identify_result_to_json(const char* algorithm, const IdentifyResult& r);
nlohmann::json reconstruction_result_to_json(const char* algorithm, const ReconstructionResult& r);

nlohmann::json reconstruction_to_json(const ReconstructedType& r);
ReconstructedType reconstruction_from_json(const nlohmann::json& j);

} // namespace menuprobe::learn
