#pragma once

// Certified evaluation of sin/cos at a rational point.  The argument is
// reduced by a multiple k0 of an approximation p' of pi/2 chosen so that
// floor(y/p') = floor(y/(pi/2)); the remainder u = y - k0 p' satisfies
// |u| <= p'/2 < 0.8 and feeds a Taylor polynomial.

#include "certrig/rational.hpp"

namespace certrig {

// Outcome of the reduction for a target accuracy 10^-r.
struct Reduction {
  Rational pprime;  // valp(m + 2)
  int m = 0;        // |pi/2 - pprime| < 10^-m
  Integer k0;
  int n = 0;        // Taylor degree
  Rational t;       // y/pprime - floor(y/pprime)

  Rational reduced(const Rational& y) const { return y - Rational(k0) * pprime; }
};

// The multiple k0 and the p' that certified it, without the degree.
struct MultipleSelection {
  Rational pprime;
  int m = 0;
  Integer k0;
  Rational t;
};

inline constexpr int kMaxRefinementDigits = 200;

// What the refinement loop of select_multiple() has to certify.
enum class Certify {
  // floor(y/p') = floor(y/p) and the k0 side of 1/2: both terms of each min.
  kFloor,
  // Only the side of 1/2, i.e. that k0 p' is the multiple of p nearest y.
  kNearest,
};

// Smallest m >= r + 1 with 10^-m <= 1 / ((|y|/1.5 + 1) 10^(r+1)).
int initial_m(const Rational& y, int r);

// min{t, 1/2 - t} on (0, 1/2), min{1 - t, t - 1/2} on (1/2, 1).
Rational stability_margin(const Rational& t);

// Starting at m = start_m, refines m until the fractional part of y/p'
// passes one of
//   2.4 * 10^m * min{t, 1/2 - t}     >= |y|   (k0 = floor(y/p'))
//   2.4 * 10^m * min{1 - t, t - 1/2} >= |y|   (k0 = floor(y/p') + 1)
// or is exactly 1/2 at the first step.  With Certify::kNearest only the
// 1/2 - t and t - 1/2 terms are tested.  Throws NonTerminationError after
// kMaxRefinementDigits extra digits.
MultipleSelection select_multiple(const Rational& y, int start_m,
                                  Certify certify = Certify::kFloor);

Reduction reduce(const Rational& y, int r);

// |result - sin y| < 10^-r.  y != 0.
Rational sin_point(const Rational& y, int r);
// |result - cos y| < 10^-r.  y != 0.
Rational cos_point(const Rational& y, int r);

// sin(pi/k) via the proxy y = (2/k) valp(r + 3).  k >= 2.
Rational sin_pi_over_k(int k, int r);

// For a caller-certified |y_true - y_proxy| < 10^-(r+1): within 10^-r of
// sin(y_true).
Rational sin_point_proxy(const Rational& y_proxy, int r);

// (-1)^(k/2) for even k, (-1)^((k-1)/2) for odd k: the sign that turns the
// reduced sin/cos branch into sin y.
int sin_branch_sign(const Integer& k0);
// (-1)^(k/2) for even k, (-1)^((k+1)/2) for odd k.
int cos_branch_sign(const Integer& k0);

}  // namespace certrig
