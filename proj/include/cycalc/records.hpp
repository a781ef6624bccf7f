#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cycalc/hodge.hpp"
#include "cycalc/serre_engine.hpp"

namespace cycalc {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Flat case record. Field names are part of the output schema.
Json case_to_json(const CaseResult& r);
/// Inverse of case_to_json for the fields the record carries.
CaseResult case_from_json(const Json& j);

std::vector<std::string> case_csv_header();
std::vector<std::string> case_csv_row(const CaseResult& r);

Json hh_to_json(const HHReport& report);
Json diamond_to_json(const HodgeDiamond& diamond);
Json profile_to_json(const HHProfile& profile);

/// {schema_version, records: [...]} followed by a newline; each record also
/// carries schema_version as its first key.
std::string render_document(const std::vector<Json>& records);

/// RFC 4180: quote when the field holds a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);
std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// "k=3;n=10"
std::string render_parameters(const Parameters& params);
/// "{-2:1, 0:22, 2:1}"
std::string render_profile(const HHProfile& profile);

}  // namespace cycalc
