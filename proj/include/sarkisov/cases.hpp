#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sarkisov/solver.hpp"
#include "sarkisov/tables.hpp"

namespace sarkisov {

// One leg of the two-sided link diagram X1 <- X~ -> X2 over Z1, Z2.

/// Conic bundle over P^2 with discriminant curve of degree d1.
struct ConicBundleSide {
  int d1 = 0;
  friend bool operator==(const ConicBundleSide&, const ConicBundleSide&) = default;
};

/// Blow-up of a smooth curve of genus `genus` and anticanonical degree
/// `curve_degree` (-K_Z . C) on a smooth rank-1 Fano base Z.
struct CurveBlowupSide {
  FanoNumerics base;
  int genus = 0;
  std::int64_t curve_degree = 1;

  friend bool operator==(const CurveBlowupSide&, const CurveBlowupSide&) = default;
  friend std::strong_ordering operator<=>(const CurveBlowupSide& lhs, const CurveBlowupSide& rhs) {
    if (auto cmp = lhs.base <=> rhs.base; cmp != 0) return cmp;
    if (auto cmp = lhs.genus <=> rhs.genus; cmp != 0) return cmp;
    return lhs.curve_degree <=> rhs.curve_degree;
  }
};

struct PointContractionSide {
  PointContractionKind kind;
  friend bool operator==(const PointContractionSide& lhs, const PointContractionSide& rhs) {
    return lhs.kind.kind == rhs.kind.kind;
  }
};

struct CitedFibrationSide {
  int link_id = 0;
  friend bool operator==(const CitedFibrationSide&, const CitedFibrationSide&) = default;
};

using LinkSide =
    std::variant<ConicBundleSide, CurveBlowupSide, PointContractionSide, CitedFibrationSide>;

std::string describe(const LinkSide& side);

struct TrailStep {
  std::string text;
  /// Exact equation instances evaluated at this step.
  std::vector<std::string> checks;
};

using Trail = std::vector<TrailStep>;

struct LinkCandidate {
  LinkSide left;
  LinkSide right;
  std::int64_t d = 0;
  int h12 = 0;
  std::optional<DiophantineSystem> system;
  std::optional<SolutionPair> solution;
  /// Set when the candidate carries the data of a known link type.
  std::optional<int> link_id;
  std::vector<std::string> errata;
  Trail trail;
};

struct CaseReport {
  std::vector<LinkCandidate> candidates;
  /// Analysis-level steps, including subcases that produced nothing.
  Trail trail;
  /// Subcases the solver could not settle (degenerate systems).
  std::vector<std::string> unresolved;
};

struct DiamondTriple {
  std::int64_t d = 0;
  int h12 = 0;
  int d1 = 0;

  friend bool operator==(const DiamondTriple&, const DiamondTriple&) = default;
  friend auto operator<=>(const DiamondTriple&, const DiamondTriple&) = default;
};

/// h^{1,2} of a standard conic bundle over P^2 with discriminant degree d1.
std::int64_t conic_bundle_h12(int d1);

/// d1 in [0, 11] \ {1, 2} whose conic-bundle h^{1,2} occurs in the table.
std::set<int> admissible_discriminants(const Dataset& dataset = default_dataset());

/// (d, h12, d1) for rows of the given index with h12 = d1(d1 - 3)/2, ordered
/// by (d, d1).
std::vector<DiamondTriple> derive_diamond_list(const Dataset& dataset = default_dataset(),
                                               int index = 1);

/// Conic bundle against a divisor contracted to a point.
CaseReport case_conic_times_point(const Dataset& dataset = default_dataset());

/// Conic bundle against the blow-up of a curve on a smooth rank-1 Fano base.
CaseReport case_conic_times_curve_blowup(const Dataset& dataset = default_dataset());

/// Conic bundle on both sides.
CaseReport case_conic_times_conic(const Dataset& dataset = default_dataset());

struct BirationalBounds {
  int g_max = 20;
  std::int64_t dc_max = 64;
};

/// Curve blow-ups on both sides. Over-generates: the result contains every
/// numerically consistent pair within the bounds, stored with left <= right.
/// Throws std::invalid_argument for bounds outside [0|1, 10 * max e].
CaseReport case_birational_times_birational(const Dataset& dataset = default_dataset(),
                                            BirationalBounds bounds = {});

enum class LinkStatus { Derived, Cited };

std::string_view to_string(LinkStatus status);

struct LinkRow {
  int link_id = 0;
  LinkStatus status = LinkStatus::Cited;
  std::optional<FanoNumerics> numerics;
  std::string left;
  std::string right;
  std::optional<SolutionPair> solution;
  std::vector<std::string> errata;
  std::optional<std::string> citation;
  Trail trail;
};

/// Raised when derived results contradict the known link data.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Derived links (7, 11, 13, 14) merged with the cited rows, sorted by id.
/// `jobs > 1` runs the four analyses concurrently; output is identical.
/// Throws InconsistencyError when a derived link is missing or the ids do
/// not form {1, ..., 17}.
std::vector<LinkRow> assemble_classification(const Dataset& dataset = default_dataset(),
                                             BirationalBounds bounds = {}, unsigned jobs = 1);

}  // namespace sarkisov
