#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sarkisov {

/// Numerical invariants of a smooth Fano threefold of Picard rank one:
/// anticanonical degree d = -K^3, Fano index and h^{1,2}.
struct FanoNumerics {
  std::int64_t d = 0;
  int index = 1;
  int h12 = 0;

  friend bool operator==(const FanoNumerics&, const FanoNumerics&) = default;
  /// Ordered by (index, d), the master-table order.
  friend std::strong_ordering operator<=>(const FanoNumerics& lhs, const FanoNumerics& rhs) {
    if (auto cmp = lhs.index <=> rhs.index; cmp != 0) return cmp;
    if (auto cmp = lhs.d <=> rhs.d; cmp != 0) return cmp;
    return lhs.h12 <=> rhs.h12;
  }

  std::string str() const;
};

enum class ContractionKind { A, B, C };

std::string_view to_string(ContractionKind kind);

/// Intersection data of a divisor D contracted to a smooth point:
/// (A) P^2 with normal bundle O(-1), (B) P^2 with O(-2), (C) a quadric
/// surface with O(-1).
struct PointContractionKind {
  ContractionKind kind;
  int k_d2_squared;  // -K . D^2
  int k2_d2;         // (-K)^2 . D
};

const std::array<PointContractionKind, 3>& point_contraction_kinds();

/// A link type settled by a citation rather than by the numerical search.
struct CitedLinkRow {
  int link_id = 0;
  std::string citation;
  bool derived = false;
  /// Invariants of X when they are pinned down without the external tables.
  std::optional<FanoNumerics> numerics;

  friend bool operator==(const CitedLinkRow&, const CitedLinkRow&) = default;
};

struct Dataset {
  std::vector<FanoNumerics> fano_rows;
  std::vector<CitedLinkRow> cited_links;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Compiled-in tables: the 17 smooth rank-1 Fano rows and the 13 links
/// settled by del Pezzo fibration citations.
const Dataset& default_dataset();

/// Checks row invariants (d > 0, index >= 1, h12 >= 0, unique (d, index),
/// cited ids in [1, 17] without repeats). Throws DatasetError.
void validate_dataset(const Dataset& dataset);

/// Rows sorted by (index, d).
std::vector<FanoNumerics> master_table(const Dataset& dataset = default_dataset());

/// h^{1,2} values present in the table, optionally restricted to one index.
std::set<int> h12_values(std::optional<int> index_filter = std::nullopt,
                         const Dataset& dataset = default_dataset());

std::vector<FanoNumerics> lookup_by_h12(int h12, const Dataset& dataset = default_dataset());

std::optional<FanoNumerics> find_row(std::int64_t d, int index,
                                     const Dataset& dataset = default_dataset());

}  // namespace sarkisov
