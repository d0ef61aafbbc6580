#pragma once

// Piecewise polynomial approximants of sin and cos on a rational interval
// [a, b] with absolute accuracy 10^-r.
//
// Each piece is a Taylor polynomial in the shifted variable u = x - center,
// where center = k p' is a multiple of an approximation of pi/2 (or 0 for the
// leading [0, 0.8] piece), so the stored form is exact.  Pieces tile [a, b]:
// interior pieces are half-open [lo, hi), the final piece is closed.

#include <string>
#include <string_view>
#include <vector>

#include "certrig/rational.hpp"
#include "certrig/taylor.hpp"

namespace certrig {

enum class TrigFunction { kSin, kCos };
// P: sine Taylor branch, Q: cosine Taylor branch.
enum class Branch { kP, kQ };

std::string_view to_string(TrigFunction f);
std::string_view to_string(Branch b);
TrigFunction parse_trig_function(std::string_view s);

struct Piece {
  Rational lo;
  Rational hi;
  Rational center;
  Polynomial poly;
  int sign = 1;
  Branch kind = Branch::kP;

  Rational value(const Rational& x) const;
  // sign * poly(x - center) multiplied out in powers of x.
  Polynomial expanded() const;
};

struct PiecewiseApprox {
  int r = 0;
  TrigFunction func = TrigFunction::kSin;
  std::vector<Piece> pieces;
  int m_global = 0;

  const Rational& a() const { return pieces.front().lo; }
  const Rational& b() const { return pieces.back().hi; }
  // Interior breakpoints, ascending.
  std::vector<Rational> breakpoints() const;
};

// Smallest m >= r + 1 with 10^-m <= 1 / ((2b + 4) 10^(r+1)).  b > 0.
int global_m(const Rational& b, int r);

// m_global recorded by the builders for [a, b]: global_m of each half that
// gets built, the larger one when the interval straddles 0.
int interval_global_m(const Rational& a, const Rational& b, int r);

// Common Taylor degree for every piece: smallest n with
// 0.8^(n+1)/(n+1)! < 10^-(r+1).
int piece_degree(int r);

struct IntervalTemplate {
  Rational pprime;
  Integer k0;
  int m = 0;  // digit count actually used (>= requested m)
  Piece piece;  // lo/hi set to (k0 -+ 1/2) pprime
};

// Generating point y -> [p', k0, F_y] using the shared digit parameter m
// (refined locally only if the floor cannot be certified at m).
IntervalTemplate intv_approx(const Rational& y, int m, int r,
                             TrigFunction func = TrigFunction::kSin);

// Builders.  All require a < b and r >= 1.
PiecewiseApprox piecewise_sin_pos(const Rational& a, const Rational& b, int r);
PiecewiseApprox piecewise_sin(const Rational& a, const Rational& b, int r);
PiecewiseApprox piecewise_cos(const Rational& a, const Rational& b, int r);
PiecewiseApprox piecewise(TrigFunction func, const Rational& a,
                          const Rational& b, int r);

// Throws DomainError for x outside [a, b].
Rational eval_piecewise(const PiecewiseApprox& f, const Rational& x);

// Index of the piece whose domain contains x.
std::size_t locate_piece(const PiecewiseApprox& f, const Rational& x);

// Serialization with rationals as "num/den" strings:
// {"func","r","a","b","pieces":[{"lo","hi","center","sign","kind","coeffs"}]}
std::string to_json(const PiecewiseApprox& f, int indent = -1);
PiecewiseApprox from_json(std::string_view text);

}  // namespace certrig
