#include "certrig/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <utility>

#include "certrig/errors.hpp"

namespace certrig {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  r.q_ = std::move(q);
  r.q_.canonicalize();
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

std::string Rational::fraction_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.q_ = -a.q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.fraction_string();
}

Integer floor(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
  return f;
}

Integer ceil(const Rational& x) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
  return c;
}

Integer round_half_even(const Rational& x) {
  Integer f = floor(x);
  const Rational frac = x - Rational(f);
  const Rational half(1, 2);
  if (frac > half || (frac == half && is_odd(f))) f += 1;
  return f;
}

Integer floor_div(const Rational& y, const Rational& d) {
  if (d.sign() <= 0) throw DomainError("floor_div requires a positive divisor");
  return floor(y / d);
}

Rational pow(const Rational& x, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), x.mpq().get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime.
  mpq_class q;
  mpz_swap(q.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(q.get_den_mpz_t(), den.get_mpz_t());
  return Rational::from_mpq(std::move(q));
}

Rational pow10(int exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned>(std::abs(exponent)));
  return exponent >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

bool is_odd(const Integer& k) { return mpz_odd_p(k.get_mpz_t()) != 0; }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

Integer parse_integer_digits(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

}  // namespace

DecimalString::DecimalString(bool negative, std::string integer_digits,
                             std::string fraction_digits)
    : negative_(negative),
      integer_digits_(std::move(integer_digits)),
      fraction_digits_(std::move(fraction_digits)) {
  if (!all_digits(integer_digits_) ||
      (!fraction_digits_.empty() && !all_digits(fraction_digits_))) {
    throw ParseError("decimal digits must be 0-9");
  }
}

DecimalString DecimalString::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (!all_digits(int_part) ||
      (dot != std::string_view::npos && !all_digits(frac_part))) {
    throw ParseError("malformed decimal: '" + std::string(text) + "'");
  }
  return DecimalString(negative, std::string(int_part), std::string(frac_part));
}

int DecimalString::digit_count() const {
  return static_cast<int>(integer_digits_.size() + fraction_digits_.size());
}

Rational DecimalString::to_rational() const {
  Integer num = parse_integer_digits(integer_digits_ + fraction_digits_);
  if (negative_) num = -num;
  const Rational scale = pow10(static_cast<int>(fraction_digits_.size()));
  return Rational(num, scale.numerator());
}

std::string DecimalString::str() const {
  std::string out;
  if (negative_) out.push_back('-');
  out += integer_digits_;
  if (!fraction_digits_.empty()) {
    out.push_back('.');
    out += fraction_digits_;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DecimalString& d) {
  return os << d.str();
}

Rational rational_from_decimal(std::string_view text) {
  return DecimalString::parse(text).to_rational();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational_from_decimal(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed fraction: '" + std::string(text) + "'");
  }
  Integer n = parse_integer_digits(num);
  const Integer d = parse_integer_digits(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

DecimalString format_fixed(const Rational& x, int frac_digits) {
  if (frac_digits < 0) throw DomainError("format_fixed: negative digit count");
  const Integer scaled = round_half_even(x * pow10(frac_digits));
  const bool negative = scaled < 0;
  std::string digits = Integer(::abs(scaled)).get_str();
  const auto width = static_cast<std::size_t>(frac_digits) + 1;
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  const auto split = digits.size() - static_cast<std::size_t>(frac_digits);
  return DecimalString(negative, digits.substr(0, split), digits.substr(split));
}

}  // namespace certrig
