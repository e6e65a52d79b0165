#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fanochern {

using BigInt = mpz_class;

/// Exact rational number, always held in canonical form: gcd(|p|, q) = 1,
/// q >= 1, and zero is 0/1.
///
/// Serialized as "p/q", or "p" when q = 1, with no whitespace.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& integer);  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string str() const;

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  /// Fused accumulate: *this += a * b, without a temporary Rational.
  void add_product(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// base^exponent for a non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace fanochern

template <>
struct std::hash<fanochern::Rational> {
  std::size_t operator()(const fanochern::Rational& value) const noexcept {
    return std::hash<std::string>{}(value.str());
  }
};
