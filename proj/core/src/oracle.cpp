#include "certrig/oracle.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "certrig/errors.hpp"
#include "certrig/pi.hpp"

namespace certrig {
namespace {

// Bound on the error of one fixed-point series term, in units of the last
// place.  Each term is t_{j+1} = trunc(t_j * x2 / (S * d_j)) with d_j >= 2 and
// |x2/S| < 0.65, so e_{j+1} <= 0.325 e_j + 1.5, which stays below 3.
constexpr long kTermUlps = 3;

struct SinCos {
  Integer sin;
  Integer cos;
  long terms = 0;
};

// Fixed-point sin and cos of X / scale for |X / scale| <= 0.8, truncating
// toward zero throughout.  sin is odd in X and cos even.
SinCos series(const Integer& x, const Integer& scale) {
  Integer x2 = x * x;
  mpz_tdiv_q(x2.get_mpz_t(), x2.get_mpz_t(), scale.get_mpz_t());
  SinCos out;
  Integer term = x;
  out.sin = 0;
  for (unsigned long j = 0; term != 0; ++j) {
    out.sin += term;
    term *= x2;
    term = -term;
    const Integer den = Integer(scale) * ((2 * j + 2) * (2 * j + 3));
    mpz_tdiv_q(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
    ++out.terms;
  }
  long cos_terms = 0;
  term = scale;
  out.cos = 0;
  for (unsigned long j = 0; term != 0; ++j) {
    out.cos += term;
    term *= x2;
    term = -term;
    const Integer den = Integer(scale) * ((2 * j + 1) * (2 * j + 2));
    mpz_tdiv_q(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
    ++cos_terms;
  }
  out.terms = std::max(out.terms, cos_terms);
  return out;
}

// Nearest integer, ties away from zero, so that x -> -x maps exactly.
Integer round_symmetric(const Rational& x) {
  Integer n = floor(x.abs() + Rational(1, 2));
  return x.sign() < 0 ? Integer(-n) : n;
}

Rational evaluate(const Rational& y, const OracleConfig& config, bool want_sin) {
  if (config.target_digits < 1) throw DomainError("oracle requires digits >= 1");
  if (y.is_zero()) return Rational(want_sin ? 0 : 1);
  const Rational target = pow10(-config.target_digits);
  const int int_digits =
      static_cast<int>(Integer(floor(y.abs()) + 1).get_str().size());

  for (int guard = std::max(config.guard_digits, 4);; guard *= 2) {
    const int work = config.target_digits + guard;
    const PiApprox half_pi = valp(work + int_digits + 2);
    const Integer k = round_symmetric(y / half_pi.value);
    const Rational x = y - Rational(k) * half_pi.value;
    const Rational reduction_err = Rational(Integer(::abs(k))) * half_pi.err_bound;

    const Rational scale_q = pow10(work);
    const Integer scale = scale_q.numerator();
    const Integer fixed = round_symmetric(x * scale_q);
    const SinCos sc = series(fixed, scale);

    // Input rounding (1/2 ulp), per-term truncation, alternating tail (the
    // first dropped term is below kTermUlps ulps).
    const Rational ulps(Integer(kTermUlps * (sc.terms + 1) + 1));
    const Rational err = reduction_err + ulps / scale_q;
    if (err >= target) continue;

    // sin(y) = sin(x + k pi/2)
    const long quadrant = mpz_fdiv_ui(k.get_mpz_t(), 4);
    const long shift = want_sin ? quadrant : (quadrant + 1) % 4;
    const Integer& base = shift % 2 == 0 ? sc.sin : sc.cos;
    const Integer value = shift >= 2 ? Integer(-base) : base;
    return Rational(value, scale);
  }
}

}  // namespace

Rational oracle_sin(const Rational& y, const OracleConfig& config) {
  return evaluate(y, config, true);
}

Rational oracle_cos(const Rational& y, const OracleConfig& config) {
  return evaluate(y, config, false);
}

Rational oracle_sin(const Rational& y, int digits) {
  return oracle_sin(y, OracleConfig{digits, 30});
}

Rational oracle_cos(const Rational& y, int digits) {
  return oracle_cos(y, OracleConfig{digits, 30});
}

std::vector<Rational> sample_points(const Rational& a, const Rational& b,
                                    int samples) {
  if (samples < 2) throw DomainError("sampling requires at least 2 samples");
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(samples));
  const Rational step = (b - a) / Rational(samples - 1);
  for (int i = 0; i < samples - 1; ++i) xs.push_back(a + step * Rational(i));
  xs.push_back(b);
  return xs;
}

Rational max_error_scan(const PiecewiseApprox& f, int samples, int jobs) {
  const std::vector<Rational> xs = sample_points(f.a(), f.b(), samples);
  const int digits = f.r + 5;
  auto error_at = [&](const Rational& x) {
    const Rational ref = f.func == TrigFunction::kSin ? oracle_sin(x, digits)
                                                      : oracle_cos(x, digits);
    return (eval_piecewise(f, x) - ref).abs();
  };

  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, samples));
  std::vector<Rational> partial(workers, Rational(0));
  std::vector<std::exception_ptr> failures(workers);
  auto scan = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < xs.size(); i += workers) {
        partial[w] = max(partial[w], error_at(xs[i]));
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(scan, w);
  }
  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  return *std::max_element(partial.begin(), partial.end());
}

}  // namespace certrig
