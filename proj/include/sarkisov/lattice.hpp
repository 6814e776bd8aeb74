#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarkisov/rational.hpp"

namespace sarkisov {

/// Basis of Pic of the blown-up threefold: pullbacks h1, h2 of the two
/// conic-bundle hyperplane classes and the exceptional surface E.
enum class Generator : std::size_t { H1 = 0, H2 = 1, E = 2 };

/// Symmetric trilinear intersection form on the rank-3 lattice <h1, h2, E>.
class CubicForm3 {
 public:
  /// h1^2.h2 = h1.h2^2 = 2, h1.h2.E = 1, h1^2.E = h2^2.E = 0, h1^3 = h2^3 = 0.
  /// The E^2 entries (h1.E^2 = h2.E^2 = -1, E^3 = 2) come from E = P^1 x P^1
  /// with normal bundle O(-1,-1); nothing downstream depends on them.
  static CubicForm3 standard();
  static CubicForm3 standard_without_e_squared();

  std::int64_t at(Generator i, Generator j, Generator k) const;
  /// Sets the entry and every permutation of it.
  void set(Generator i, Generator j, Generator k, std::int64_t value);

  CubicForm3 scaled(std::int64_t factor) const;

  bool symmetric() const;

 private:
  std::array<std::int64_t, 27> entries_{};
};

struct LatticeVector {
  std::array<Rational, 3> coefficients{Rational(0), Rational(0), Rational(0)};

  static LatticeVector basis(Generator g);
  static LatticeVector of(Rational h1, Rational h2, Rational e) { return {{h1, h2, e}}; }

  const Rational& operator[](Generator g) const {
    return coefficients[static_cast<std::size_t>(g)];
  }

  friend LatticeVector operator+(const LatticeVector& lhs, const LatticeVector& rhs);
  friend LatticeVector operator*(const Rational& scalar, const LatticeVector& v);
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  std::string str() const;
};

Rational triple_product(const LatticeVector& u, const LatticeVector& v, const LatticeVector& w,
                        const CubicForm3& form = CubicForm3::standard());

class SingularSystem : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact Gaussian elimination for a 3x3 rational system. Throws SingularSystem.
std::array<Rational, 3> solve3(std::array<std::array<Rational, 3>, 3> matrix,
                               std::array<Rational, 3> rhs);

/// Rows (F.h1^2, F.h2^2, F.h1.h2) as linear forms in the coefficients of F.
std::array<std::array<Rational, 3>, 3> test_matrix(const CubicForm3& form);

/// The class F with F.h1^2 = rhs[0], F.h2^2 = rhs[1], F.h1.h2 = rhs[2].
LatticeVector solve_by_test_curves(const CubicForm3& form, const std::array<Rational, 3>& rhs);

/// A divisor contracted by the map to P^2 x P^2 meets h1^2, h2^2 and h1.h2
/// trivially; returns that (necessarily zero) class.
LatticeVector solve_contracted_divisor(const CubicForm3& form = CubicForm3::standard());

/// Image of E under the covering involution, which fixes h1 and h2: it must
/// have the same products with h1^2, h2^2, h1.h2 as E.
LatticeVector solve_involution_image(const CubicForm3& form = CubicForm3::standard());

struct DegreeSplit {
  std::int64_t map_degree;  // deg(sigma)
  std::int64_t e1;
  std::int64_t e2;

  friend bool operator==(const DegreeSplit&, const DegreeSplit&) = default;
  friend auto operator<=>(const DegreeSplit&, const DegreeSplit&) = default;
};

/// All (s, e1, e2) with total = 3 s (e1 + e2), s, e1 >= 1, e1 <= e2, ordered
/// by (s, e1). Throws std::invalid_argument unless total is a positive
/// multiple of 3.
std::vector<DegreeSplit> degree_split(std::int64_t total);

/// Splits compatible with both projections being conic bundles: e1 = e2.
std::vector<DegreeSplit> symmetric_degree_splits(std::int64_t total);

/// From (-K - H)^3 = -(D.C)^3 recovers D.C by exact cube root. Throws
/// std::domain_error when -cube_value is not a perfect cube.
BigInt intersection_from_cube(const BigInt& cube_value);

}  // namespace sarkisov
