#include "sarkisov/simd/grid_scan.hpp"

namespace sarkisov::simd {

void scan_scalar(const GridProblem& p, std::vector<GridHit>& hits) {
  const std::int64_t n = p.extent;
  for (std::int64_t a = -n; a <= n; ++a) {
    const std::int64_t row_quadratic = p.d * a * a - p.quadratic_rhs;
    const std::int64_t row_linear = p.d * a - p.linear_rhs;
    const std::int64_t cross = -2 * p.k * a;
    for (std::int64_t b = -n; b <= n; ++b) {
      const std::int64_t linear = row_linear - p.k * b;
      const std::int64_t quadratic = row_quadratic + cross * b + 2 * b * b;
      if (linear == 0 && quadratic == 0) {
        hits.push_back({a, b});
      }
    }
  }
}

}  // namespace sarkisov::simd
