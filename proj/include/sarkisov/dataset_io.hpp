#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sarkisov/tables.hpp"

namespace sarkisov {

// Override file layout:
//   {"fano_rows":   [{"d": int, "index": int, "h12": int}, ...],
//    "cited_links": [{"id": int, "citation": string,
//                     optional "d", "index", "h12": int}, ...]}
// Both arrays are required. Errors carry "source:line:column" for syntax
// problems and a JSON path (e.g. "fano_rows[3].h12") for field problems.

Dataset parse_dataset(std::string_view text, std::string_view source = "<input>");
Dataset load_dataset(const std::filesystem::path& path);

nlohmann::json dataset_to_json(const Dataset& dataset);

/// SHA-256 (hex) of the canonical JSON serialization.
std::string dataset_hash(const Dataset& dataset);

}  // namespace sarkisov
