#pragma once

// Brute-force lattice scan behind the verification oracle.
//
// The scan visits every integer pair (A, B) with |A|, |B| <= extent and
// reports the pairs satisfying
//
//   d A^2 - 2 k A B + 2 B^2 == quadratic_rhs
//   d A   -   k B           == linear_rhs
//
// A scalar int64 kernel is the reference; an AVX2 kernel evaluates eight B
// values per step in int32 lanes and is selected at runtime when the CPU
// supports it and every intermediate fits in int32. Both kernels emit hits in
// the same (A ascending, B ascending) order.

#include <cstdint>
#include <string_view>
#include <vector>

namespace sarkisov::simd {

struct GridProblem {
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::int64_t quadratic_rhs = 0;
  std::int64_t linear_rhs = 0;
  std::int64_t extent = 0;
};

struct GridHit {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const GridHit&, const GridHit&) = default;
};

enum class Kernel { Auto, Scalar, Avx2 };

std::string_view to_string(Kernel kernel);

/// Upper bound on |lhs| of either equation over the grid, or -1 if it does
/// not fit in int64.
std::int64_t magnitude_bound(const GridProblem& problem);

/// True when all lane arithmetic of the AVX2 kernel stays inside int32.
bool fits_int32(const GridProblem& problem);

/// Whether the AVX2 kernel was compiled in and the running CPU supports it.
bool avx2_available();

/// Resolves Auto to the fastest usable kernel for `problem`; explicit
/// requests for an unusable kernel throw std::invalid_argument.
Kernel resolve(Kernel requested, const GridProblem& problem);

void scan_scalar(const GridProblem& problem, std::vector<GridHit>& hits);
void scan_avx2(const GridProblem& problem, std::vector<GridHit>& hits);

/// Dispatching entry point. Throws std::invalid_argument when the problem
/// overflows int64 or extent is negative.
std::vector<GridHit> scan(const GridProblem& problem, Kernel kernel = Kernel::Auto);

}  // namespace sarkisov::simd
