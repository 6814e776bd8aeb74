#include "sarkisov/tables.hpp"

#include <algorithm>
#include <map>

namespace sarkisov {

std::string FanoNumerics::str() const {
  return "(" + std::to_string(d) + "," + std::to_string(index) + "," + std::to_string(h12) + ")";
}

std::string_view to_string(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::A:
      return "A";
    case ContractionKind::B:
      return "B";
    case ContractionKind::C:
      return "C";
  }
  return "?";
}

const std::array<PointContractionKind, 3>& point_contraction_kinds() {
  static const std::array<PointContractionKind, 3> kinds{{
      {ContractionKind::A, -2, 4},
      {ContractionKind::B, -2, 1},
      {ContractionKind::C, -2, 2},
  }};
  return kinds;
}

const Dataset& default_dataset() {
  static const Dataset dataset = [] {
    Dataset out;
    out.fano_rows = {
        // index 1
        {2, 1, 52},
        {4, 1, 30},
        {6, 1, 20},
        {8, 1, 14},
        {10, 1, 10},
        {12, 1, 7},
        {14, 1, 5},
        {16, 1, 3},
        {18, 1, 2},
        {22, 1, 0},
        // del Pezzo threefolds, quadric, P^3
        {8, 2, 21},
        {16, 2, 10},
        {24, 2, 5},
        {32, 2, 2},
        {40, 2, 0},
        {54, 3, 0},
        {64, 4, 0},
    };

    const std::string takeuchi = "Takeuchi (2022), del Pezzo fibration links";
    auto cite = [&](int id, std::string citation, std::optional<FanoNumerics> numerics = {}) {
      out.cited_links.push_back({id, std::move(citation), false, numerics});
    };
    cite(1, takeuchi + "; X is a complete intersection of a quadric cone and a sextic in "
                       "P(1,1,1,1,2,3)",
         FanoNumerics{2, 1, 52});
    for (int id : {2, 3, 4, 5, 6, 8, 9, 10, 12}) {
      cite(id, takeuchi);
    }
    cite(15, "Fukuoka (2017, 2019), fibration into del Pezzo surfaces of degree 6");
    cite(16, takeuchi + "; X is a nodal quintic del Pezzo threefold", FanoNumerics{40, 2, 0});
    cite(17, takeuchi + "; X is the nodal quadric threefold in P^4", FanoNumerics{54, 3, 0});
    return out;
  }();
  return dataset;
}

void validate_dataset(const Dataset& dataset) {
  std::map<std::pair<std::int64_t, int>, std::size_t> seen;
  for (std::size_t i = 0; i < dataset.fano_rows.size(); ++i) {
    const auto& row = dataset.fano_rows[i];
    const std::string where = "fano_rows[" + std::to_string(i) + "]";
    if (row.d <= 0) throw DatasetError(where + ".d: must be positive");
    if (row.index < 1) throw DatasetError(where + ".index: must be >= 1");
    if (row.h12 < 0) throw DatasetError(where + ".h12: must be >= 0");
    auto [it, inserted] = seen.emplace(std::pair{row.d, row.index}, i);
    if (!inserted) {
      throw DatasetError(where + ": duplicate (d,index) = (" + std::to_string(row.d) + "," +
                         std::to_string(row.index) + "), first seen at fano_rows[" +
                         std::to_string(it->second) + "]");
    }
  }
  std::set<int> ids;
  for (std::size_t i = 0; i < dataset.cited_links.size(); ++i) {
    const auto& row = dataset.cited_links[i];
    const std::string where = "cited_links[" + std::to_string(i) + "]";
    if (row.link_id < 1 || row.link_id > 17) {
      throw DatasetError(where + ".id: must lie in [1,17], got " + std::to_string(row.link_id));
    }
    if (!ids.insert(row.link_id).second) {
      throw DatasetError(where + ".id: duplicate link id " + std::to_string(row.link_id));
    }
  }
}

std::vector<FanoNumerics> master_table(const Dataset& dataset) {
  auto rows = dataset.fano_rows;
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::set<int> h12_values(std::optional<int> index_filter, const Dataset& dataset) {
  std::set<int> out;
  for (const auto& row : dataset.fano_rows) {
    if (!index_filter || row.index == *index_filter) {
      out.insert(row.h12);
    }
  }
  return out;
}

std::vector<FanoNumerics> lookup_by_h12(int h12, const Dataset& dataset) {
  std::vector<FanoNumerics> out;
  for (const auto& row : master_table(dataset)) {
    if (row.h12 == h12) {
      out.push_back(row);
    }
  }
  return out;
}

std::optional<FanoNumerics> find_row(std::int64_t d, int index, const Dataset& dataset) {
  for (const auto& row : dataset.fano_rows) {
    if (row.d == d && row.index == index) {
      return row;
    }
  }
  return std::nullopt;
}

}  // namespace sarkisov
