#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "sarkisov/simd/grid_scan.hpp"

namespace sarkisov::simd {

namespace {

__int128 abs128(std::int64_t value) { return value < 0 ? -static_cast<__int128>(value) : value; }

}  // namespace

std::string_view to_string(Kernel kernel) {
  switch (kernel) {
    case Kernel::Auto:
      return "auto";
    case Kernel::Scalar:
      return "scalar";
    case Kernel::Avx2:
      return "avx2";
  }
  return "unknown";
}

std::int64_t magnitude_bound(const GridProblem& p) {
  if (p.extent < 0) {
    return -1;
  }
  const __int128 n = p.extent;
  const __int128 quadratic =
      (abs128(p.d) + 2 * abs128(p.k) + 2) * n * n + abs128(p.quadratic_rhs);
  const __int128 linear = (abs128(p.d) + abs128(p.k)) * n + abs128(p.linear_rhs);
  const __int128 worst = quadratic > linear ? quadratic : linear;
  // Leave headroom for the partial sums formed inside the kernels.
  if (worst > std::numeric_limits<std::int64_t>::max() / 4) {
    return -1;
  }
  return static_cast<std::int64_t>(worst);
}

bool fits_int32(const GridProblem& p) {
  const auto bound = magnitude_bound(p);
  return bound >= 0 && bound <= std::numeric_limits<std::int32_t>::max() / 4;
}

bool avx2_available() {
#if defined(SARKISOV_HAVE_AVX2_KERNEL)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported;
#else
  return false;
#endif
}

#if !defined(SARKISOV_HAVE_AVX2_KERNEL)
void scan_avx2(const GridProblem&, std::vector<GridHit>&) {
  throw std::invalid_argument("AVX2 grid kernel not compiled into this build");
}
#endif

Kernel resolve(Kernel requested, const GridProblem& problem) {
  if (requested == Kernel::Scalar) {
    return Kernel::Scalar;
  }
  const bool usable = avx2_available() && fits_int32(problem);
  if (requested == Kernel::Avx2) {
    if (!usable) {
      throw std::invalid_argument("AVX2 grid kernel unavailable for this problem");
    }
    return Kernel::Avx2;
  }
  // SARKISOV_SIMD=scalar pins the reference kernel for Auto requests.
  if (const char* env = std::getenv("SARKISOV_SIMD"); env != nullptr && std::string(env) == "scalar") {
    return Kernel::Scalar;
  }
  return usable ? Kernel::Avx2 : Kernel::Scalar;
}

std::vector<GridHit> scan(const GridProblem& problem, Kernel kernel) {
  if (problem.extent < 0) {
    throw std::invalid_argument("grid extent must be non-negative");
  }
  if (magnitude_bound(problem) < 0) {
    throw std::invalid_argument("grid problem overflows 64-bit arithmetic");
  }
  std::vector<GridHit> hits;
  if (resolve(kernel, problem) == Kernel::Avx2) {
    scan_avx2(problem, hits);
  } else {
    scan_scalar(problem, hits);
  }
  return hits;
}

}  // namespace sarkisov::simd
