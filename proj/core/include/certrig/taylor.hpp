#pragma once

// Taylor polynomials of sin and cos about 0, exact evaluation, and the
// remainder-driven degree search.

#include <functional>
#include <vector>

#include "certrig/rational.hpp"

namespace certrig {

// Dense polynomial with exact rational coefficients, index = degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Exact value at x.  Works over the integers: with x = a/b and the
  // coefficients brought to a common denominator L, it evaluates
  // sum c_i L a^i b^(d-i) by Horner and divides once at the end.
  Rational operator()(const Rational& x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
  std::vector<Integer> scaled_;  // coeffs_ * common_den_
  Integer common_den_ = 1;
};

Rational eval(const Polynomial& poly, const Rational& x);

// P_n(y) = sum_{m=0}^{floor((n-1)/2)} (-1)^m y^(2m+1) / (2m+1)!
Polynomial sin_taylor(int n);
// Q_n(y) = sum_{m=0}^{floor(n/2)} (-1)^m y^(2m) / (2m)!
Polynomial cos_taylor(int n);

// n!, memoized.
Integer factorial(int n);

// y_abs^(n+1) / (n+1)!
Rational remainder_bound(const Rational& y_abs, int n);

using DegreeBound = std::function<Rational(int)>;

inline constexpr int kMaxDegree = 10000;

// Smallest n >= 0 with bound(n) < threshold.  Throws NonTerminationError
// past kMaxDegree.
int min_degree(const DegreeBound& bound, const Rational& threshold);

// min_degree(remainder_bound(y_abs, .), threshold), computed with running
// integer products instead of one reduced rational per candidate degree.
int min_remainder_degree(const Rational& y_abs, const Rational& threshold);

}  // namespace certrig
