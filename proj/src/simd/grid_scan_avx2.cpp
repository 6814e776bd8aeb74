// Compiled with -mavx2; only reached through dispatch after a CPU check.
#include <immintrin.h>

#include "sarkisov/simd/grid_scan.hpp"

namespace sarkisov::simd {

void scan_avx2(const GridProblem& p, std::vector<GridHit>& hits) {
  const auto n = static_cast<std::int32_t>(p.extent);
  const auto d = static_cast<std::int32_t>(p.d);
  const auto k = static_cast<std::int32_t>(p.k);
  const auto q = static_cast<std::int32_t>(p.quadratic_rhs);
  const auto l = static_cast<std::int32_t>(p.linear_rhs);

  const std::int32_t width = 2 * n + 1;
  const std::int32_t full_blocks = width / 8;
  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i k_vec = _mm256_set1_epi32(k);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i step = _mm256_set1_epi32(8);

  for (std::int32_t a = -n; a <= n; ++a) {
    const __m256i row_quadratic = _mm256_set1_epi32(d * a * a - q);
    const __m256i row_linear = _mm256_set1_epi32(d * a - l);
    const __m256i cross = _mm256_set1_epi32(-2 * k * a);

    __m256i b = _mm256_add_epi32(_mm256_set1_epi32(-n), lane_offsets);
    for (std::int32_t block = 0; block < full_blocks; ++block) {
      const __m256i linear = _mm256_sub_epi32(row_linear, _mm256_mullo_epi32(k_vec, b));
      const __m256i b_sq = _mm256_mullo_epi32(b, b);
      __m256i quadratic = _mm256_add_epi32(row_quadratic, _mm256_mullo_epi32(cross, b));
      quadratic = _mm256_add_epi32(quadratic, _mm256_add_epi32(b_sq, b_sq));

      const __m256i both = _mm256_and_si256(_mm256_cmpeq_epi32(linear, zero),
                                            _mm256_cmpeq_epi32(quadratic, zero));
      auto mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(both)));
      const std::int32_t base = -n + block * 8;
      while (mask != 0) {
        const int lane = __builtin_ctz(mask);
        hits.push_back({a, base + lane});
        mask &= mask - 1;
      }
      b = _mm256_add_epi32(b, step);
    }

    for (std::int32_t bs = -n + full_blocks * 8; bs <= n; ++bs) {
      const std::int32_t linear = d * a - l - k * bs;
      const std::int32_t quadratic = d * a * a - q - 2 * k * a * bs + 2 * bs * bs;
      if (linear == 0 && quadratic == 0) {
        hits.push_back({a, bs});
      }
    }
  }
}

}  // namespace sarkisov::simd
