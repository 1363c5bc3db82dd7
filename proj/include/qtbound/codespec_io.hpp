#pragma once

// JSON code-spec files and report serialization. "inf" encodes infinity.

#include <string>

#include <json.hpp>

#include "qtbound/bounds.hpp"
#include "qtbound/qtstruct.hpp"

namespace qtbound {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Throws ParseError with the offending field path or line/column.
QTCodeSpec parse_code_spec(const std::string& text);
QTCodeSpec load_code_spec(const std::string& path);
nlohmann::json code_spec_to_json(const QTCodeSpec& spec);
/// Canonical pretty-printed form; parse/serialize is idempotent on it.
std::string serialize_code_spec(const QTCodeSpec& spec);

nlohmann::json distance_to_json(Distance d);
nlohmann::json distance_to_json(const std::optional<Distance>& d);
std::string distance_to_csv(const std::optional<Distance>& d);

struct AnalysisOptions {
  std::vector<ExpSet> eigencode_sets;  // extra P sets to report
  OracleLimits lim;
};
nlohmann::json analysis_to_json(const QTCodeSpec& spec, const AnalysisOptions& opt = {});

nlohmann::json record_to_json(const BoundRecord& r);
nlohmann::json report_to_json(const BoundReport& rep);
std::string report_csv_header();
std::string report_csv_row(const BoundReport& rep);

}  // namespace qtbound
