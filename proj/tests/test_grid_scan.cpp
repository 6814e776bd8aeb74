#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sarkisov/simd/grid_scan.hpp"

using namespace sarkisov::simd;

namespace {

std::vector<GridHit> run(Kernel kernel, const GridProblem& p) {
  std::vector<GridHit> hits;
  if (kernel == Kernel::Scalar) {
    scan_scalar(p, hits);
  } else {
    scan_avx2(p, hits);
  }
  return hits;
}

}  // namespace

TEST_CASE("scalar kernel finds the planted solutions") {
  // d=14, k=7, (a,b) in {(0,-1), (1,1)} for rhs (2, 7).
  const GridProblem p{14, 7, 2, 7, 30};
  const auto hits = run(Kernel::Scalar, p);
  CHECK(hits == std::vector<GridHit>{{0, -1}, {1, 1}});
}

TEST_CASE("extent zero visits only the origin") {
  CHECK(run(Kernel::Scalar, {5, 3, 0, 0, 0}) == std::vector<GridHit>{{0, 0}});
  CHECK(run(Kernel::Scalar, {5, 3, 1, 0, 0}).empty());
}

TEST_CASE("magnitude bounds and kernel resolution") {
  CHECK(fits_int32({64, 12, 30, 30, 400}));
  CHECK_FALSE(fits_int32({64, 12, 30, 30, 100000}));
  CHECK(magnitude_bound({64, 12, 0, 0, -1}) == -1);
  CHECK(magnitude_bound({64, 12, 0, 0, std::int64_t{1} << 40}) == -1);
  CHECK(resolve(Kernel::Scalar, {64, 12, 30, 30, 400}) == Kernel::Scalar);
  CHECK(resolve(Kernel::Auto, {64, 12, 30, 30, 100000}) == Kernel::Scalar);
  CHECK_THROWS_AS(resolve(Kernel::Avx2, {64, 12, 30, 30, 100000}), std::invalid_argument);
  CHECK_THROWS_AS(scan({1, 1, 0, 0, -3}), std::invalid_argument);
  CHECK_THROWS_AS(scan({1, 1, 0, 0, std::int64_t{1} << 40}), std::invalid_argument);
}

TEST_CASE("AVX2 kernel matches the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 unavailable on this machine; equivalence test skipped");
    return;
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> degree(1, 64);
  std::uniform_int_distribution<int> coefficient(0, 12);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> extent(0, 40);

  int with_hits = 0;
  for (int trial = 0; trial < 600; ++trial) {
    GridProblem p{degree(rng), coefficient(rng), 0, 0, extent(rng)};
    // Plant a solution half of the time so both branches are exercised.
    if (trial % 2 == 0 && p.extent > 0) {
      std::uniform_int_distribution<int> coord(static_cast<int>(-p.extent),
                                               static_cast<int>(p.extent));
      const std::int64_t a = coord(rng);
      const std::int64_t b = coord(rng);
      p.quadratic_rhs = p.d * a * a - 2 * p.k * a * b + 2 * b * b;
      p.linear_rhs = p.d * a - p.k * b;
    } else {
      p.quadratic_rhs = small(rng);
      p.linear_rhs = small(rng);
    }
    const auto scalar = run(Kernel::Scalar, p);
    const auto vector = run(Kernel::Avx2, p);
    CAPTURE(trial);
    REQUIRE(scalar == vector);
    with_hits += scalar.empty() ? 0 : 1;
  }
  CHECK(with_hits >= 250);
}

TEST_CASE("AVX2 kernel handles every tail length") {
  if (!avx2_available()) return;
  // Row width 2n + 1 runs through all residues mod 8.
  for (std::int64_t n = 0; n <= 16; ++n) {
    const GridProblem p{2, 0, 2 * n * n + 2 * n * n, 2 * n, n};
    CAPTURE(n);
    CHECK(run(Kernel::Scalar, p) == run(Kernel::Avx2, p));
    CHECK(scan(p, Kernel::Auto) == run(Kernel::Scalar, p));
  }
}
