#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sarkisov/anchors.hpp"
#include "sarkisov/cases.hpp"
#include "sarkisov/solver.hpp"
#include "sarkisov/tables.hpp"

namespace sarkisov {

enum class Format { Json, Markdown, Csv };

/// "json", "md", "csv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

using ReportRow = LinkRow;

struct ReportMeta {
  std::string dataset_hash;
  BirationalBounds bounds;
};

// All emitters are deterministic. JSON output is compact with sorted keys,
// so a parse/dump round trip is byte-identical. Rationals in the link report
// serialize as "p/q" strings.

/// Classification table. Throws std::invalid_argument for an empty row list.
std::string emit_report(const std::vector<ReportRow>& rows, Format format, const ReportMeta& meta,
                        bool include_trail = false);

nlohmann::json report_json(const std::vector<ReportRow>& rows, const ReportMeta& meta,
                           bool include_trail = false);

std::string emit_diamond(const std::vector<DiamondTriple>& diamond, Format format);

std::string emit_case(std::string_view analysis, const CaseReport& report, Format format,
                      bool include_trail = false);

/// JSON: [[a,b],...] with integers as numbers and other rationals as "p/q".
std::string emit_solutions(const std::vector<SolutionPair>& solutions, Format format);

std::string emit_checks(const AnchorChecks& checks, Format format);

std::string emit_dataset(const Dataset& dataset, Format format);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace sarkisov
