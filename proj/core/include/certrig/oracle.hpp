#pragma once

// Reference values of sin and cos by brute-force oversized precision, kept
// apart from the reduction logic of pointwise.hpp so agreement between the
// two is evidence of correctness.

#include "certrig/piecewise.hpp"
#include "certrig/rational.hpp"

namespace certrig {

struct OracleConfig {
  int target_digits = 20;
  int guard_digits = 30;
};

// |result - sin y| < 10^-digits.
Rational oracle_sin(const Rational& y, int digits);
Rational oracle_cos(const Rational& y, int digits);
Rational oracle_sin(const Rational& y, const OracleConfig& config);
Rational oracle_cos(const Rational& y, const OracleConfig& config);

// Equispaced points a + i (b - a)/(samples - 1), i = 0..samples-1.
std::vector<Rational> sample_points(const Rational& a, const Rational& b,
                                    int samples);

// max_i |f(x_i) - oracle(x_i, r + 5)| over sample_points(a, b, samples).
// jobs > 1 splits the samples across threads; the result does not depend on
// jobs.
Rational max_error_scan(const PiecewiseApprox& f, int samples, int jobs = 1);

}  // namespace certrig
