#pragma once

#include <string>

#include <json.hpp>

#include "scsim/harness.hpp"
#include "scsim/metrics.hpp"

namespace scsim {

// Rounds to `digits` significant digits (card JSON carries 6).
double round_sig(double x, int digits);

nlohmann::ordered_json card_to_json(const ScorCard& card);
ScorCard card_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const SensitivityReport& report);

// Fixed-width table mirroring the SCOR card layout: attribute, metric,
// issue, then the five measurement columns as signed percents.
std::string render_table(const SensitivityReport& report);

// CRN comparison of two scenarios: per-metric percent deltas of means.
nlohmann::ordered_json compare_to_json(const std::string& baseline_name,
                                       const std::string& other_name,
                                       const ReplicationSet& baseline,
                                       const ReplicationSet& other);

void write_file(const std::string& path, const std::string& content);

// Structural validator for the subset of JSON Schema the shipped schemas
// use: type, properties, required, additionalProperties, items, enum.
// Returns human-readable violations; empty means valid.
std::vector<std::string> validate_against_schema(const nlohmann::json& schema,
                                                 const nlohmann::json& doc);

}  // namespace scsim
