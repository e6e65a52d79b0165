#include "fanochern/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fanochern {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& integer) : value_(integer) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
  }
  return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

void Rational::add_product(const Rational& a, const Rational& b) {
  mpq_class product;
  mpq_mul(product.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), product.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

}  // namespace fanochern
