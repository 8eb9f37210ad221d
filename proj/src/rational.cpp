#include "ering/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ering {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(mpz_class(std::to_string(value), 10)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(Rational(numerator).value_.get_num(), Rational(denominator).value_.get_num());
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_decimal_integer(num)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!is_decimal_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

std::int64_t Rational::ceil_int64() const {
  const mpz_class q = ceil().numerator();
  if (!q.fits_slong_p()) throw std::overflow_error("Rational::ceil_int64: out of range");
  return q.get_si();
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace ering
