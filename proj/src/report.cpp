#include "sarkisov/report.hpp"

#include <sstream>
#include <stdexcept>

#include "sarkisov/dataset_io.hpp"

namespace sarkisov {

namespace {

using nlohmann::json;

json trail_json(const Trail& trail) {
  json out = json::array();
  for (const auto& step : trail) {
    out.push_back({{"text", step.text}, {"checks", step.checks}});
  }
  return out;
}

std::string md_cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += separator;
    out += parts[i];
  }
  return out;
}

std::string opt_int(const std::optional<FanoNumerics>& numerics, std::int64_t FanoNumerics::*field,
                    std::string_view missing) {
  return numerics ? std::to_string((*numerics).*field) : std::string(missing);
}

std::string opt_int(const std::optional<FanoNumerics>& numerics, int FanoNumerics::*field,
                    std::string_view missing) {
  return numerics ? std::to_string((*numerics).*field) : std::string(missing);
}

std::vector<std::string> trail_lines(const Trail& trail) {
  std::vector<std::string> out;
  for (const auto& step : trail) {
    std::string line = step.text;
    if (!step.checks.empty()) line += " [" + join(step.checks, "; ") + "]";
    out.push_back(std::move(line));
  }
  return out;
}

void append_md_trail(std::ostringstream& out, const std::string& heading, const Trail& trail) {
  out << "\n### " << heading << "\n\n";
  for (const auto& line : trail_lines(trail)) out << "- " << line << "\n";
}

json rational_json(const Rational& value) {
  if (value.is_integer()) {
    return json(value.num().convert_to<std::int64_t>());
  }
  return json(value.fraction());
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "md") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, md, csv)");
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json report_json(const std::vector<ReportRow>& rows, const ReportMeta& meta, bool include_trail) {
  json links = json::array();
  for (const auto& row : rows) {
    json entry{
        {"id", row.link_id},
        {"status", std::string(to_string(row.status))},
        {"d", row.numerics ? json(row.numerics->d) : json(nullptr)},
        {"index", row.numerics ? json(row.numerics->index) : json(nullptr)},
        {"h12", row.numerics ? json(row.numerics->h12) : json(nullptr)},
        {"left", row.left},
        {"right", row.right},
        {"a", row.solution ? json(row.solution->a.fraction()) : json(nullptr)},
        {"b", row.solution ? json(row.solution->b.fraction()) : json(nullptr)},
        {"errata", row.errata},
        {"citation", row.citation ? json(*row.citation) : json(nullptr)},
    };
    if (include_trail) entry["trail"] = trail_json(row.trail);
    links.push_back(std::move(entry));
  }
  return json{{"links", std::move(links)},
              {"meta",
               {{"dataset_hash", meta.dataset_hash},
                {"bounds", {{"g_max", meta.bounds.g_max}, {"dc_max", meta.bounds.dc_max}}}}}};
}

std::string emit_report(const std::vector<ReportRow>& rows, Format format, const ReportMeta& meta,
                        bool include_trail) {
  if (rows.empty()) {
    throw std::invalid_argument("cannot emit an empty report");
  }
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << report_json(rows, meta, include_trail).dump() << "\n";
      break;
    case Format::Markdown:
      out << "| link | status | d | I | h12 | left | right | (a,b) | errata |\n";
      out << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& row : rows) {
        out << "| " << row.link_id << " | " << to_string(row.status) << " | "
            << opt_int(row.numerics, &FanoNumerics::d, "?") << " | "
            << opt_int(row.numerics, &FanoNumerics::index, "?") << " | "
            << opt_int(row.numerics, &FanoNumerics::h12, "?") << " | " << md_cell(row.left)
            << " | " << md_cell(row.citation ? row.right + ": " + *row.citation : row.right)
            << " | " << (row.solution ? row.solution->str() : "") << " | "
            << md_cell(join(row.errata, "; ")) << " |\n";
      }
      if (include_trail) {
        out << "\n## Trails\n";
        for (const auto& row : rows) {
          append_md_trail(out, "Link " + std::to_string(row.link_id), row.trail);
        }
      }
      out << "\ndataset " << meta.dataset_hash << ", bounds g_max=" << meta.bounds.g_max
          << " dc_max=" << meta.bounds.dc_max << "\n";
      break;
    case Format::Csv:
      out << "link,status,d,I,h12,left,right,a,b,errata,citation";
      if (include_trail) out << ",trail";
      out << "\n";
      for (const auto& row : rows) {
        out << row.link_id << "," << to_string(row.status) << ","
            << opt_int(row.numerics, &FanoNumerics::d, "") << ","
            << opt_int(row.numerics, &FanoNumerics::index, "") << ","
            << opt_int(row.numerics, &FanoNumerics::h12, "") << "," << csv_field(row.left) << ","
            << csv_field(row.right) << "," << (row.solution ? row.solution->a.fraction() : "")
            << "," << (row.solution ? row.solution->b.fraction() : "") << ","
            << csv_field(join(row.errata, "; ")) << "," << csv_field(row.citation.value_or(""));
        if (include_trail) out << "," << csv_field(join(trail_lines(row.trail), " | "));
        out << "\n";
      }
      break;
  }
  return out.str();
}

std::string emit_diamond(const std::vector<DiamondTriple>& diamond, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json triples = json::array();
      for (const auto& t : diamond) triples.push_back({t.d, t.h12, t.d1});
      out << json{{"diamond", triples}}.dump() << "\n";
      break;
    }
    case Format::Markdown:
      out << "| d | h12 | d1 |\n|---|---|---|\n";
      for (const auto& t : diamond) out << "| " << t.d << " | " << t.h12 << " | " << t.d1 << " |\n";
      break;
    case Format::Csv:
      out << "d,h12,d1\n";
      for (const auto& t : diamond) out << t.d << "," << t.h12 << "," << t.d1 << "\n";
      break;
  }
  return out.str();
}

std::string emit_case(std::string_view analysis, const CaseReport& report, Format format,
                      bool include_trail) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json candidates = json::array();
      for (const auto& c : report.candidates) {
        json entry{{"left", describe(c.left)},
                   {"right", describe(c.right)},
                   {"d", c.d},
                   {"h12", c.h12},
                   {"a", c.solution ? json(c.solution->a.fraction()) : json(nullptr)},
                   {"b", c.solution ? json(c.solution->b.fraction()) : json(nullptr)},
                   {"link", c.link_id ? json(*c.link_id) : json(nullptr)},
                   {"errata", c.errata}};
        if (include_trail) entry["trail"] = trail_json(c.trail);
        candidates.push_back(std::move(entry));
      }
      json doc{{"analysis", std::string(analysis)},
               {"candidates", std::move(candidates)},
               {"unresolved", report.unresolved}};
      if (include_trail) doc["trail"] = trail_json(report.trail);
      out << doc.dump() << "\n";
      break;
    }
    case Format::Markdown:
      out << "## " << analysis << ": " << report.candidates.size() << " candidate(s)\n\n";
      out << "| link | d | h12 | left | right | (a,b) | errata |\n";
      out << "|---|---|---|---|---|---|---|\n";
      for (const auto& c : report.candidates) {
        out << "| " << (c.link_id ? std::to_string(*c.link_id) : "") << " | " << c.d << " | "
            << c.h12 << " | " << md_cell(describe(c.left)) << " | " << md_cell(describe(c.right))
            << " | " << (c.solution ? c.solution->str() : "") << " | "
            << md_cell(join(c.errata, "; ")) << " |\n";
      }
      for (const auto& u : report.unresolved) out << "\nunresolved: " << u << "\n";
      if (include_trail) append_md_trail(out, "Trail", report.trail);
      break;
    case Format::Csv:
      out << "link,d,h12,left,right,a,b,errata\n";
      for (const auto& c : report.candidates) {
        out << (c.link_id ? std::to_string(*c.link_id) : "") << "," << c.d << "," << c.h12 << ","
            << csv_field(describe(c.left)) << "," << csv_field(describe(c.right)) << ","
            << (c.solution ? c.solution->a.fraction() : "") << ","
            << (c.solution ? c.solution->b.fraction() : "") << ","
            << csv_field(join(c.errata, "; ")) << "\n";
      }
      break;
  }
  return out.str();
}

std::string emit_solutions(const std::vector<SolutionPair>& solutions, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json pairs = json::array();
      for (const auto& s : solutions) pairs.push_back({rational_json(s.a), rational_json(s.b)});
      out << pairs.dump() << "\n";
      break;
    }
    case Format::Markdown:
      out << "| a | b |\n|---|---|\n";
      for (const auto& s : solutions) out << "| " << s.a << " | " << s.b << " |\n";
      break;
    case Format::Csv:
      out << "a,b\n";
      for (const auto& s : solutions) out << s.a << "," << s.b << "\n";
      break;
  }
  return out.str();
}

std::string emit_checks(const AnchorChecks& checks, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json list = json::array();
      for (const auto& c : checks) {
        list.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out << json{{"checks", list}}.dump() << "\n";
      break;
    }
    case Format::Markdown:
      out << "| check | result | detail |\n|---|---|---|\n";
      for (const auto& c : checks) {
        out << "| " << md_cell(c.name) << " | " << (c.passed ? "pass" : "FAIL") << " | "
            << md_cell(c.detail) << " |\n";
      }
      break;
    case Format::Csv:
      out << "check,result,detail\n";
      for (const auto& c : checks) {
        out << csv_field(c.name) << "," << (c.passed ? "pass" : "FAIL") << ","
            << csv_field(c.detail) << "\n";
      }
      break;
  }
  return out.str();
}

std::string emit_dataset(const Dataset& dataset, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << dataset_to_json(dataset).dump() << "\n";
      break;
    case Format::Markdown:
      out << "| d | I | h12 |\n|---|---|---|\n";
      for (const auto& row : master_table(dataset)) {
        out << "| " << row.d << " | " << row.index << " | " << row.h12 << " |\n";
      }
      out << "\n| link | citation |\n|---|---|\n";
      for (const auto& row : dataset.cited_links) {
        out << "| " << row.link_id << " | " << md_cell(row.citation) << " |\n";
      }
      break;
    case Format::Csv:
      out << "d,I,h12\n";
      for (const auto& row : master_table(dataset)) {
        out << row.d << "," << row.index << "," << row.h12 << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace sarkisov
