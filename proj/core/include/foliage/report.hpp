#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "foliage/cohomology.hpp"
#include "foliage/identities.hpp"
#include "foliage/lefschetz.hpp"

namespace foliage {

inline constexpr const char* kReportSchema = "foliage-report/1";

nlohmann::json to_json(const Thresholds& th);
nlohmann::json to_json(const ModelFlags& flags);
nlohmann::json to_json(const CohomologyReport& rep);
nlohmann::json to_json(const IdentitySuiteResult& res);
nlohmann::json to_json(const Sl2Report& rep);
nlohmann::json to_json(const LefschetzRank& rank);
nlohmann::json to_json(const HodgeDiamondReport& rep);

// Document skeleton shared by every report: schema, kind, model, K and the thresholds.
nlohmann::json report_header(const std::string& kind, const FoliationModel& model, int K, const Thresholds& th);
// Stable text rendering (sorted keys, two-space indent, trailing newline).
std::string render(const nlohmann::json& doc);
// Structural check of a rendered report against the foliage-report/1 layout.
void validate_report(const nlohmann::json& doc);

}  // namespace foliage
