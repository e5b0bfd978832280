#pragma once

#include "tempered/presets.hpp"
#include "tempered/series.hpp"

#include <json.hpp>

namespace tempered {

/// JSON conventions shared by the CLI and the python bindings: object keys
/// sorted, rationals and rational vectors as "p/q" strings, roots as
/// comma-joined integer strings, verdicts as "yes"/"no"/"undecided".
nlohmann::json groupsJson();
nlohmann::json cartansJson(const GroupPreset& preset);
nlohmann::json orbitReportJson(const OrbitReport& report);
nlohmann::json bbwJson(const BbwResult& result);
nlohmann::json seriesParamJson(const SeriesParam& param);
nlohmann::json realizationJson(const RealizationResult& result);
nlohmann::json catalogJson(const GroupPreset& preset);

/// Flat "key: value" text rendering of a JSON object, for --format text.
std::string jsonToText(const nlohmann::json& j);

} // namespace tempered
