#include "sarkisov/solver.hpp"

#include <algorithm>
#include <sstream>

namespace sarkisov {

std::string_view to_string(Integrality mode) {
  return mode == Integrality::Integers ? "integers" : "half-integers";
}

int denominator_bound(Integrality mode) { return mode == Integrality::Integers ? 1 : 2; }

DiophantineSystem DiophantineSystem::make(std::int64_t d, int d1, std::int64_t rhs_quadratic,
                                          std::int64_t rhs_linear) {
  return DiophantineSystem{d, d1, rhs_quadratic, rhs_linear, mode_for(d1)};
}

void DiophantineSystem::validate() const {
  if (d <= 0) {
    throw InvalidSystem("invalid system: d must be positive, got " + std::to_string(d));
  }
  if (d1 < 0 || d1 > 11 || d1 == 1 || d1 == 2) {
    throw InvalidSystem("invalid system: discriminant degree must lie in [0,11] \\ {1,2}, got " +
                        std::to_string(d1));
  }
  if (integrality != mode_for(d1)) {
    throw InvalidSystem("invalid system: integrality " + std::string(to_string(integrality)) +
                        " is inconsistent with d1=" + std::to_string(d1));
  }
}

std::string DiophantineSystem::equations() const {
  std::ostringstream out;
  const auto k = anticanonical_h();
  out << d << "a^2 - " << 2 * k << "ab + 2b^2 = " << rhs_quadratic << "; " << d << "a - " << k
      << "b = " << rhs_linear;
  return out.str();
}

Residuals residuals(const DiophantineSystem& sys, const SolutionPair& point) {
  const Rational d(sys.d);
  const Rational k(sys.anticanonical_h());
  const auto& [a, b] = point;
  Rational quadratic = d * a * a - Rational(2) * k * a * b + Rational(2) * b * b;
  Rational linear = d * a - k * b;
  return {quadratic - Rational(sys.rhs_quadratic), linear - Rational(sys.rhs_linear)};
}

bool respects(Integrality mode, const SolutionPair& point) {
  const int bound = denominator_bound(mode);
  return point.a.denominator_divides(bound) && point.b.denominator_divides(bound);
}

DegenerateSystem::DegenerateSystem(const DiophantineSystem& sys, RationalSolutionSet::Line line)
    : std::domain_error("degenerate system (" + sys.equations() +
                        "): every point of a = " + line.intercept.str() + " + " +
                        line.slope.str() + "*b is a solution"),
      line_(std::move(line)) {}

RationalSolutionSet solve_rational(const DiophantineSystem& sys) {
  sys.validate();
  // Substituting a = (l + k b) / d into the quadratic equation and clearing
  // the denominator d gives l^2 - k^2 b^2 + 2 d b^2 = q d: the b-linear terms
  // cancel, leaving (2d - k^2) b^2 = q d - l^2.
  const BigInt d = sys.d;
  const BigInt k = sys.anticanonical_h();
  const BigInt q = sys.rhs_quadratic;
  const BigInt l = sys.rhs_linear;
  const BigInt leading = 2 * d - k * k;
  const BigInt constant = q * d - l * l;

  RationalSolutionSet out;
  if (leading == 0) {
    if (constant == 0) {
      out.family = RationalSolutionSet::Line{Rational(l, d), Rational(k, d)};
    }
    return out;
  }

  const Rational b_squared(constant, leading);
  if (b_squared.sign() < 0) {
    return out;
  }
  auto root = exact_sqrt(b_squared);
  if (!root) {
    return out;
  }
  std::vector<Rational> bs{*root};
  if (!root->is_zero()) {
    bs.push_back(-*root);
  }
  for (const auto& b : bs) {
    Rational a = (Rational(l, 1) + Rational(k, 1) * b) / Rational(d, 1);
    out.rational_points.push_back({a, b});
  }
  std::sort(out.rational_points.begin(), out.rational_points.end());
  return out;
}

std::vector<SolutionPair> solve_system(const DiophantineSystem& sys) {
  auto set = solve_rational(sys);
  if (set.family) {
    throw DegenerateSystem(sys, *set.family);
  }
  std::vector<SolutionPair> admissible;
  for (auto& point : set.rational_points) {
    if (respects(sys.integrality, point)) {
      admissible.push_back(std::move(point));
    }
  }
  return admissible;
}

std::int64_t anticanonical_minus_h_cubed(std::int64_t d, int d1) {
  // (-K - H)^3 = (-K)^3 - 3 (-K)^2.H + 3 (-K).H^2 - H^3
  return d - 3 * (12 - static_cast<std::int64_t>(d1)) + 3 * 2 - 0;
}

}  // namespace sarkisov
