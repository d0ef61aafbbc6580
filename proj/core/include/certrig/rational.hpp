#pragma once

// Exact rational arithmetic and decimal I/O.  Every certified quantity in the
// library is a Rational; nothing in here rounds except format_fixed().

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace certrig {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  // Throws DomainError when den == 0.
  Rational(const Integer& num, const Integer& den);

  static Rational from_mpq(mpq_class q);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  // "num/den", always with an explicit denominator.
  std::string fraction_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
// Nearest integer, ties to even.
Integer round_half_even(const Rational& x);

// Largest integer <= y / d.  Throws DomainError unless d > 0.
Integer floor_div(const Rational& y, const Rational& d);

Rational pow(const Rational& x, unsigned exponent);
// 10^exponent for any sign of exponent.
Rational pow10(int exponent);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

bool is_odd(const Integer& k);

// A signed decimal numeral with a fixed number of fractional digits.
class DecimalString {
 public:
  DecimalString() = default;
  DecimalString(bool negative, std::string integer_digits,
                std::string fraction_digits);

  // Grammar: [-]digits[.digits].  Throws ParseError.
  static DecimalString parse(std::string_view text);

  bool negative() const { return negative_; }
  const std::string& integer_digits() const { return integer_digits_; }
  const std::string& fraction_digits() const { return fraction_digits_; }
  // Total number of digits written (integer + fractional).
  int digit_count() const;

  Rational to_rational() const;
  std::string str() const;

  friend bool operator==(const DecimalString&, const DecimalString&) = default;

 private:
  bool negative_ = false;
  std::string integer_digits_ = "0";
  std::string fraction_digits_;
};

std::ostream& operator<<(std::ostream& os, const DecimalString& d);

Rational rational_from_decimal(std::string_view text);
// Accepts the decimal grammar or [-]int/int.  Throws ParseError.
Rational parse_rational(std::string_view text);

// Round-half-even to exactly frac_digits fractional digits.
DecimalString format_fixed(const Rational& x, int frac_digits);

}  // namespace certrig
