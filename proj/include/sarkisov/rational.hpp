#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sarkisov {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Division by zero throws std::domain_error.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  /// True when the denominator divides `modulus` (1 for integers, 2 for
  /// half-integers).
  bool denominator_divides(int modulus) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);
  Rational operator-() const;

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// Always "p/q" (e.g. "3/1", "-1/2").
  std::string fraction() const;
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

/// Integer square root of a perfect square; nullopt for negatives and
/// non-squares.
std::optional<BigInt> exact_isqrt(const BigInt& value);

/// Square root of a rational that is a square of a rational (numerator and
/// denominator both perfect squares in lowest terms).
std::optional<Rational> exact_sqrt(const Rational& value);

/// Integer cube root of a perfect cube (negative values allowed).
std::optional<BigInt> exact_icbrt(const BigInt& value);

}  // namespace sarkisov
