#include "sarkisov/dataset_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace sarkisov {

namespace {

using nlohmann::json;

std::string prefixed(std::string_view source, const std::string& message) {
  return std::string(source) + ": " + message;
}

std::int64_t require_int(const json& object, const char* key, const std::string& where,
                         std::string_view source) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw DatasetError(prefixed(source, where + "." + key + ": missing field"));
  }
  if (!it->is_number_integer()) {
    throw DatasetError(prefixed(source, where + "." + key + ": expected integer, got " +
                                            std::string(it->type_name())));
  }
  return it->get<std::int64_t>();
}

int require_small_int(const json& object, const char* key, const std::string& where,
                      std::string_view source) {
  const auto value = require_int(object, key, where, source);
  if (value < -1'000'000 || value > 1'000'000) {
    throw DatasetError(prefixed(source, where + "." + key + ": value out of range"));
  }
  return static_cast<int>(value);
}

const json& require_array(const json& root, const char* key, std::string_view source) {
  auto it = root.find(key);
  if (it == root.end()) {
    throw DatasetError(prefixed(source, std::string(key) + ": missing array"));
  }
  if (!it->is_array()) {
    throw DatasetError(prefixed(source, std::string(key) + ": expected array, got " +
                                            std::string(it->type_name())));
  }
  return *it;
}

}  // namespace

Dataset parse_dataset(std::string_view text, std::string_view source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DatasetError(prefixed(source, e.what()));
  }
  if (!root.is_object()) {
    throw DatasetError(prefixed(source, "top level: expected object"));
  }

  Dataset out;
  const auto& rows = require_array(root, "fano_rows", source);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "fano_rows[" + std::to_string(i) + "]";
    if (!rows[i].is_object()) {
      throw DatasetError(prefixed(source, where + ": expected object"));
    }
    out.fano_rows.push_back({require_int(rows[i], "d", where, source),
                             require_small_int(rows[i], "index", where, source),
                             require_small_int(rows[i], "h12", where, source)});
  }

  const auto& cited = require_array(root, "cited_links", source);
  for (std::size_t i = 0; i < cited.size(); ++i) {
    const std::string where = "cited_links[" + std::to_string(i) + "]";
    const auto& entry = cited[i];
    if (!entry.is_object()) {
      throw DatasetError(prefixed(source, where + ": expected object"));
    }
    CitedLinkRow row;
    row.link_id = require_small_int(entry, "id", where, source);
    auto citation = entry.find("citation");
    if (citation == entry.end() || !citation->is_string()) {
      throw DatasetError(prefixed(source, where + ".citation: expected string"));
    }
    row.citation = citation->get<std::string>();
    const bool has_d = entry.contains("d");
    const bool has_index = entry.contains("index");
    const bool has_h12 = entry.contains("h12");
    if (has_d || has_index || has_h12) {
      if (!(has_d && has_index && has_h12)) {
        throw DatasetError(
            prefixed(source, where + ": d, index and h12 must be given together"));
      }
      row.numerics = FanoNumerics{require_int(entry, "d", where, source),
                                  require_small_int(entry, "index", where, source),
                                  require_small_int(entry, "h12", where, source)};
    }
    out.cited_links.push_back(std::move(row));
  }

  try {
    validate_dataset(out);
  } catch (const DatasetError& e) {
    throw DatasetError(prefixed(source, e.what()));
  }
  return out;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DatasetError(path.string() + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str(), path.string());
}

nlohmann::json dataset_to_json(const Dataset& dataset) {
  json rows = json::array();
  for (const auto& row : master_table(dataset)) {
    rows.push_back({{"d", row.d}, {"index", row.index}, {"h12", row.h12}});
  }
  auto cited_sorted = dataset.cited_links;
  std::sort(cited_sorted.begin(), cited_sorted.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.link_id < rhs.link_id; });
  json cited = json::array();
  for (const auto& row : cited_sorted) {
    json entry{{"id", row.link_id}, {"citation", row.citation}};
    if (row.numerics) {
      entry["d"] = row.numerics->d;
      entry["index"] = row.numerics->index;
      entry["h12"] = row.numerics->h12;
    }
    cited.push_back(std::move(entry));
  }
  return json{{"fano_rows", std::move(rows)}, {"cited_links", std::move(cited)}};
}

std::string dataset_hash(const Dataset& dataset) {
  const std::string canonical = dataset_to_json(dataset).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

}  // namespace sarkisov
