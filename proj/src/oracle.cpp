#include "sarkisov/oracle.hpp"

#include <stdexcept>

namespace sarkisov {

std::vector<SolutionPair> brute_force_oracle(const DiophantineSystem& sys, std::int64_t bound,
                                             simd::Kernel kernel) {
  if (bound < 1) {
    throw std::invalid_argument("oracle bound must be >= 1, got " + std::to_string(bound));
  }
  sys.validate();

  // Scale (a, b) = (A, B) / s so the scan runs over integers.
  const std::int64_t s = denominator_bound(sys.integrality);
  simd::GridProblem problem{
      .d = sys.d,
      .k = sys.anticanonical_h(),
      .quadratic_rhs = sys.rhs_quadratic * s * s,
      .linear_rhs = sys.rhs_linear * s,
      .extent = bound * s,
  };

  std::vector<SolutionPair> out;
  for (const auto& hit : simd::scan(problem, kernel)) {
    out.push_back({Rational(BigInt(hit.a), BigInt(s)), Rational(BigInt(hit.b), BigInt(s))});
  }
  // Hits arrive ordered by (A, B); dividing by s > 0 preserves that order.
  return out;
}

}  // namespace sarkisov
