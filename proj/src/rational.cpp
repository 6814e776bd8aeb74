#include "sarkisov/rational.hpp"

#include <stdexcept>

namespace sarkisov {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    }
  }
  BigInt magnitude(std::string(text.substr(start)));
  return text.front() == '-' ? BigInt(-magnitude) : magnitude;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  normalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text), BigInt(1));
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

bool Rational::denominator_divides(int modulus) const {
  return modulus != 0 && BigInt(modulus) % den_ == 0;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) {
    throw std::domain_error("rational division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  BigInt left = lhs.num_ * rhs.den_;
  BigInt right = rhs.num_ * lhs.den_;
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::fraction() const { return num_.str() + "/" + den_.str(); }

std::string Rational::str() const { return is_integer() ? num_.str() : fraction(); }

std::ostream& operator<<(std::ostream& out, const Rational& value) { return out << value.str(); }

std::optional<BigInt> exact_isqrt(const BigInt& value) {
  if (value < 0) {
    return std::nullopt;
  }
  BigInt remainder;
  BigInt root = boost::multiprecision::sqrt(value, remainder);
  if (remainder != 0) {
    return std::nullopt;
  }
  return root;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  auto num = exact_isqrt(value.num());
  if (!num) return std::nullopt;
  auto den = exact_isqrt(value.den());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<BigInt> exact_icbrt(const BigInt& value) {
  if (value < 0) {
    auto root = exact_icbrt(BigInt(-value));
    if (!root) return std::nullopt;
    return BigInt(-*root);
  }
  // Bisection on [0, 2^(bits/3 + 1)].
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (boost::multiprecision::msb(value + 1) / 3 + 2);
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid < value) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo * lo * lo != value) {
    return std::nullopt;
  }
  return lo;
}

}  // namespace sarkisov
