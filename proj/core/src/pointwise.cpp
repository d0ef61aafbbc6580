#include "certrig/pointwise.hpp"

#include <string>

#include "certrig/errors.hpp"
#include "certrig/pi.hpp"
#include "certrig/taylor.hpp"

namespace certrig {
namespace {

const Rational kHalf(1, 2);
// Lower bound on p * p', valid once p' has three significant digits.
const Rational kMargin(12, 5);

void require_nonzero(const Rational& y, const char* what) {
  if (y.is_zero()) throw DomainError(std::string(what) + " requires y != 0");
}

void require_accuracy(int r, const char* what) {
  if (r < 1) throw DomainError(std::string(what) + " requires r >= 1");
}

// (-1)^(e) for an integer exponent e.
int parity_sign(const Integer& e) { return is_odd(e) ? -1 : 1; }

}  // namespace

int initial_m(const Rational& y, int r) {
  require_nonzero(y, "initial_m");
  require_accuracy(r, "initial_m");
  const Rational bound =
      (Rational(y.abs() * Rational(2, 3) + 1) * pow10(r + 1)).reciprocal();
  int m = r + 1;
  while (bound < pow10(-m)) ++m;
  return m;
}

Rational stability_margin(const Rational& t) {
  if (t.sign() <= 0 || t >= 1 || t == kHalf) {
    throw DomainError("stability_margin requires 0 < t < 1, t != 1/2");
  }
  if (t < kHalf) return min(t, kHalf - t);
  return min(Rational(1) - t, t - kHalf);
}

MultipleSelection select_multiple(const Rational& y, int start_m,
                                  Certify certify) {
  require_nonzero(y, "select_multiple");
  const Rational y_abs = y.abs();
  int m = start_m;
  auto step = [&y](int digits) {
    MultipleSelection s;
    s.m = digits;
    s.pprime = valp(digits + 2).value;
    const Integer q = floor_div(y, s.pprime);
    s.t = y / s.pprime - Rational(q);
    s.k0 = q;
    return s;
  };

  MultipleSelection s = step(m);
  if (s.t == kHalf) return s;
  for (;;) {
    const Rational scale = kMargin * pow10(s.m);
    const bool nearest = certify == Certify::kNearest;
    const Rational below = nearest ? kHalf - s.t : min(s.t, kHalf - s.t);
    const Rational above =
        nearest ? s.t - kHalf : min(Rational(1) - s.t, s.t - kHalf);
    if (scale * below >= y_abs) return s;
    if (scale * above >= y_abs) {
      s.k0 += 1;
      return s;
    }
    if (s.m - start_m >= kMaxRefinementDigits) {
      throw NonTerminationError("reduction did not certify floor(y/p') within " +
                                std::to_string(kMaxRefinementDigits) +
                                " extra digits");
    }
    s = step(s.m + 1);
  }
}

Reduction reduce(const Rational& y, int r) {
  require_nonzero(y, "reduce");
  require_accuracy(r, "reduce");
  MultipleSelection s = select_multiple(y, initial_m(y, r));
  Reduction red;
  red.pprime = std::move(s.pprime);
  red.m = s.m;
  red.k0 = std::move(s.k0);
  red.t = std::move(s.t);
  const Rational u_abs = red.reduced(y).abs();
  const Rational threshold = pow10(-(r + 1));
  red.n = min_remainder_degree(u_abs, threshold);
  return red;
}

int sin_branch_sign(const Integer& k0) {
  if (is_odd(k0)) return parity_sign(Integer((k0 - 1) / 2));
  return parity_sign(Integer(k0 / 2));
}

int cos_branch_sign(const Integer& k0) {
  if (is_odd(k0)) return parity_sign(Integer((k0 + 1) / 2));
  return parity_sign(Integer(k0 / 2));
}

Rational sin_point(const Rational& y, int r) {
  const Reduction red = reduce(y, r);
  const Rational u = red.reduced(y);
  const Polynomial poly = is_odd(red.k0) ? cos_taylor(red.n) : sin_taylor(red.n);
  return Rational(sin_branch_sign(red.k0)) * poly(u);
}

Rational cos_point(const Rational& y, int r) {
  const Reduction red = reduce(y, r);
  const Rational u = red.reduced(y);
  const Polynomial poly = is_odd(red.k0) ? sin_taylor(red.n) : cos_taylor(red.n);
  return Rational(cos_branch_sign(red.k0)) * poly(u);
}

Rational sin_pi_over_k(int k, int r) {
  if (k < 2) throw DomainError("sin_pi_over_k requires k >= 2");
  require_accuracy(r, "sin_pi_over_k");
  const Rational proxy = Rational(2, k) * valp(r + 3).value;
  return sin_point_proxy(proxy, r);
}

Rational sin_point_proxy(const Rational& y_proxy, int r) {
  require_accuracy(r, "sin_point_proxy");
  return sin_point(y_proxy, r + 1);
}

}  // namespace certrig
