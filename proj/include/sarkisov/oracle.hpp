#pragma once

#include <cstdint>
#include <vector>

#include "sarkisov/simd/grid_scan.hpp"
#include "sarkisov/solver.hpp"

namespace sarkisov {

/// Independent check of solve_system: enumerates every (a, b) with
/// denominator 1 (Integers) or dividing 2 (HalfIntegers) and |a|, |b| <= bound,
/// keeping the pairs that satisfy both equations exactly. Pure lattice scan,
/// no square roots. Output sorted lexicographically.
///
/// Throws std::invalid_argument when bound < 1 and InvalidSystem when the
/// system violates its invariants.
std::vector<SolutionPair> brute_force_oracle(const DiophantineSystem& sys, std::int64_t bound,
                                             simd::Kernel kernel = simd::Kernel::Auto);

}  // namespace sarkisov
