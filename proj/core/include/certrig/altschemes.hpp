#pragma once

// Triple-angle approximation schemes for |y| < 1 and their error bounds:
//   small_sin_34  sin y ~ 3 P_n(y/3) - 4 P_n(y/3)^3   bound eps1
//   small_sin_35  sin y ~ P_n(y/3) [1 + 2 Q_n(2y/3)]  bound eps2
//   small_cos_40  cos y ~ 4 Q_n(y/3)^3 - 3 Q_n(y/3)   bound omega1
// eps0 is the plain Taylor bound 0.8^(n+1)/(n+1)! used by the piecewise
// builder.

#include <span>
#include <string_view>
#include <vector>

#include "certrig/rational.hpp"

namespace certrig {

enum class Scheme { kEps0, kEps1, kEps2, kOmega1 };

std::string_view scheme_name(Scheme s);

struct SchemeBound {
  Scheme scheme = Scheme::kEps0;
  Rational y_abs;
  int n = 0;
  Rational value;
};

// Evaluates the closed form of `scheme` at (y_abs, n).  kEps0 ignores y_abs
// and uses 4/5.
SchemeBound scheme_bound(Scheme scheme, const Rational& y_abs, int n);

Rational eps0(int n);
Rational eps1(const Rational& y_abs, int n);
Rational eps2(const Rational& y_abs, int n);
Rational omega1(const Rational& y_abs, int n);

// Throw DomainError for |y| >= 1.
Rational small_sin_34(const Rational& y, int n);
Rational small_sin_35(const Rational& y, int n);
Rational small_cos_40(const Rational& y, int n);

// Pointwise sine with the reduction of reduce() and the composed
// polynomials: eps1 picks n on the sin branch, omega1 on the cos branch.
// Smallest n with bound(y_abs, n) < threshold, for 0 <= y_abs <= 1 and a
// bound increasing in y and decreasing in n (eps1, eps2, omega1).
int triple_degree(Rational (*bound)(const Rational&, int), const Rational& y_abs,
                  const Rational& threshold);

Rational sin_point_triple(const Rational& y, int r);

struct DegreeRow {
  int r = 0;
  int n_eps1 = 0;
  int degree_eps1 = 0;  // 3 n
  int n_eps2 = 0;
  int degree_eps2 = 0;  // 2 n
  int n_eps0 = 0;
};

// Smallest n with bound(0.8, n) < 10^-(r+1) for each scheme.
std::vector<DegreeRow> degree_table(std::span<const int> rs);

}  // namespace certrig
