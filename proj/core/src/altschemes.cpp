#include "certrig/altschemes.hpp"

#include <string>

#include "certrig/errors.hpp"
#include "certrig/pointwise.hpp"
#include "certrig/taylor.hpp"

namespace certrig {
namespace {

const Rational kFourFifths(4, 5);

void require_abs_below_one(const Rational& y, const char* what) {
  if (y.abs() >= 1) throw DomainError(std::string(what) + " requires |y| < 1");
}

void require_bound_args(const Rational& y_abs, int n) {
  if (y_abs.sign() < 0) throw DomainError("scheme bound requires y_abs >= 0");
  if (n < 0) throw DomainError("scheme bound requires n >= 0");
}

unsigned u(int v) { return static_cast<unsigned>(v); }

// 3^(n+1) (n+1)!
Rational third_factorial(int n) {
  return pow(Rational(3), u(n + 1)) * Rational(factorial(n + 1));
}

Rational cube(const Rational& x) { return x * x * x; }

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kEps0: return "eps0";
    case Scheme::kEps1: return "eps1";
    case Scheme::kEps2: return "eps2";
    case Scheme::kOmega1: return "omega1";
  }
  return "?";
}

Rational eps0(int n) { return remainder_bound(kFourFifths, n); }

Rational eps1(const Rational& y_abs, int n) {
  require_bound_args(y_abs, n);
  const Rational& y = y_abs;
  const Rational d = third_factorial(n);
  return Rational(4) * (pow(y, u(3 * n + 3)) / cube(d) +
                        pow(y, u(2 * n + 3)) / (d * d)) +
         (Rational(4, 3) * y * y + 3) * pow(y, u(n + 1)) / d;
}

Rational eps2(const Rational& y_abs, int n) {
  require_bound_args(y_abs, n);
  const Rational& y = y_abs;
  const Rational fact = Rational(factorial(n + 1));
  const Rational three_n = pow(Rational(3), u(n));
  const Rational two_thirds = pow(Rational(2, 3), u(n + 2));
  return two_thirds * pow(y, u(2 * n + 2)) / (three_n * fact * fact) +
         pow(y, u(n + 1)) / (three_n * fact) +
         two_thirds * pow(y, u(n + 2)) / fact;
}

Rational omega1(const Rational& y_abs, int n) {
  require_bound_args(y_abs, n);
  const Rational& y = y_abs;
  const Rational d = third_factorial(n);
  return Rational(4) * (pow(y, u(3 * n + 3)) / cube(d) +
                        Rational(3) * pow(y, u(2 * n + 2)) / (d * d)) +
         Rational(5) * pow(y, u(n + 1)) /
             (pow(Rational(3), u(n)) * Rational(factorial(n + 1)));
}

SchemeBound scheme_bound(Scheme scheme, const Rational& y_abs, int n) {
  SchemeBound b{scheme, y_abs, n, Rational(0)};
  switch (scheme) {
    case Scheme::kEps0:
      b.y_abs = kFourFifths;
      b.value = eps0(n);
      break;
    case Scheme::kEps1: b.value = eps1(y_abs, n); break;
    case Scheme::kEps2: b.value = eps2(y_abs, n); break;
    case Scheme::kOmega1: b.value = omega1(y_abs, n); break;
  }
  return b;
}

Rational small_sin_34(const Rational& y, int n) {
  require_abs_below_one(y, "small_sin_34");
  const Rational a = sin_taylor(n)(y / 3);
  return Rational(3) * a - Rational(4) * cube(a);
}

Rational small_sin_35(const Rational& y, int n) {
  require_abs_below_one(y, "small_sin_35");
  const Rational a = sin_taylor(n)(y / 3);
  const Rational c = cos_taylor(n)(Rational(2, 3) * y);
  return a * (Rational(1) + Rational(2) * c);
}

Rational small_cos_40(const Rational& y, int n) {
  require_abs_below_one(y, "small_cos_40");
  const Rational b = cos_taylor(n)(y / 3);
  return Rational(4) * cube(b) - Rational(3) * b;
}

int triple_degree(Rational (*bound)(const Rational&, int), const Rational& y_abs,
                  const Rational& threshold) {
  // bound(y, n) grows with y and shrinks with n for 0 <= y <= 1, so the
  // search runs at a short-denominator Y >= y_abs and then steps down with
  // exact checks; the result equals the exact minimal degree.
  const Rational scale = pow10(12);
  const Rational y_hi = min(Rational(ceil(y_abs * scale)) / scale, Rational(1));
  int n = min_degree([&](int k) { return bound(y_hi, k); }, threshold);
  while (n > 0 && bound(y_abs, n - 1) < threshold) --n;
  return n;
}

Rational sin_point_triple(const Rational& y, int r) {
  const Reduction red = reduce(y, r);
  const Rational u = red.reduced(y);
  const Rational u_abs = u.abs();
  const Rational threshold = pow10(-(r + 1));
  const Rational sign(sin_branch_sign(red.k0));
  if (!is_odd(red.k0)) {
    const int n = triple_degree(eps1, u_abs, threshold);
    const Rational a = sin_taylor(n)(u / 3);
    return sign * (Rational(3) * a - Rational(4) * cube(a));
  }
  const int n = triple_degree(omega1, u_abs, threshold);
  const Rational b = cos_taylor(n)(u / 3);
  return sign * (Rational(4) * cube(b) - Rational(3) * b);
}

std::vector<DegreeRow> degree_table(std::span<const int> rs) {
  std::vector<DegreeRow> rows;
  rows.reserve(rs.size());
  for (const int r : rs) {
    if (r < 1) throw DomainError("degree_table requires r >= 1");
    const Rational threshold = pow10(-(r + 1));
    DegreeRow row;
    row.r = r;
    row.n_eps1 = min_degree([](int n) { return eps1(kFourFifths, n); }, threshold);
    row.n_eps2 = min_degree([](int n) { return eps2(kFourFifths, n); }, threshold);
    row.n_eps0 = min_degree(eps0, threshold);
    row.degree_eps1 = 3 * row.n_eps1;
    row.degree_eps2 = 2 * row.n_eps2;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace certrig
