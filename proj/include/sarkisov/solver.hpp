#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarkisov/rational.hpp"

namespace sarkisov {

/// Denominators allowed for the divisor-class coefficients (a, b). A conic
/// bundle with empty discriminant (d1 = 0) is a P^1-bundle with a rational
/// section, so half-integers appear; otherwise (a, b) are integral.
enum class Integrality { Integers, HalfIntegers };

std::string_view to_string(Integrality mode);

/// Largest denominator admitted by `mode` (1 or 2).
int denominator_bound(Integrality mode);

class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Transfer system linking the conic-bundle side (degree d, discriminant
/// degree d1) with the opposite side of the link:
///
///   d a^2 - 2(12 - d1) a b + 2 b^2 = rhs_quadratic   (-K . D^2)
///   d a   -  (12 - d1) b           = rhs_linear      ((-K)^2 . D)
struct DiophantineSystem {
  std::int64_t d = 0;
  int d1 = 0;
  std::int64_t rhs_quadratic = 0;
  std::int64_t rhs_linear = 0;
  Integrality integrality = Integrality::Integers;

  /// Builds a system with the integrality mode implied by d1.
  static DiophantineSystem make(std::int64_t d, int d1, std::int64_t rhs_quadratic,
                                std::int64_t rhs_linear);

  static Integrality mode_for(int d1) {
    return d1 == 0 ? Integrality::HalfIntegers : Integrality::Integers;
  }

  /// 12 - d1, i.e. (-K)^2 . H on the conic-bundle side.
  std::int64_t anticanonical_h() const { return 12 - d1; }

  /// Throws InvalidSystem("invalid system: ...") when d <= 0, d1 is outside
  /// [0, 11] \ {1, 2}, or the integrality mode disagrees with d1.
  void validate() const;

  /// Human-readable instance, e.g. "14a^2 - 14ab + 2b^2 = 2; 14a - 7b = 7".
  std::string equations() const;

  friend bool operator==(const DiophantineSystem&, const DiophantineSystem&) = default;
};

struct SolutionPair {
  Rational a;
  Rational b;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
  friend std::strong_ordering operator<=>(const SolutionPair& lhs, const SolutionPair& rhs) {
    if (auto cmp = lhs.a <=> rhs.a; cmp != 0) return cmp;
    return lhs.b <=> rhs.b;
  }

  std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }
};

struct Residuals {
  Rational quadratic;
  Rational linear;

  bool zero() const { return quadratic.is_zero() && linear.is_zero(); }
};

/// Left-hand sides minus right-hand sides at (a, b).
Residuals residuals(const DiophantineSystem& sys, const SolutionPair& point);

bool respects(Integrality mode, const SolutionPair& point);

/// Solution set over the rationals. When the substituted quadratic in b
/// vanishes identically (2d = (12 - d1)^2 and rhs_linear^2 = d * rhs_quadratic)
/// every point of the line a = intercept + slope * b solves the system and
/// `family` is set; `rational_points` is then empty.
struct RationalSolutionSet {
  struct Line {
    Rational intercept;
    Rational slope;
  };

  std::vector<SolutionPair> rational_points;
  std::optional<Line> family;
};

/// Thrown by solve_system when the solution set is a whole line.
class DegenerateSystem : public std::domain_error {
 public:
  DegenerateSystem(const DiophantineSystem& sys, RationalSolutionSet::Line line);

  const RationalSolutionSet::Line& line() const { return line_; }

 private:
  RationalSolutionSet::Line line_;
};

/// Every rational solution (no integrality filter), sorted.
RationalSolutionSet solve_rational(const DiophantineSystem& sys);

/// All solutions respecting the system's integrality mode, sorted
/// lexicographically by (a, b). Exact: the linear equation is substituted
/// into the quadratic and the resulting square root taken exactly.
///
/// Throws InvalidSystem for systems violating their invariants and
/// DegenerateSystem when the solution set is a line.
std::vector<SolutionPair> solve_system(const DiophantineSystem& sys);

/// (-K - H)^3 on the conic-bundle side, using H^3 = 0, -K.H^2 = 2 and
/// (-K)^2.H = 12 - d1: d - 3(12 - d1) + 6.
std::int64_t anticanonical_minus_h_cubed(std::int64_t d, int d1);

}  // namespace sarkisov
