#include "certrig/pi.hpp"

#include <algorithm>
#include <utility>

#include "certrig/errors.hpp"

namespace certrig {
namespace {

struct AtanBounds {
  Rational lo;
  Rational hi;
};

// atan(1/x) = sum_{k>=0} (-1)^k / ((2k+1) x^(2k+1)).  The series alternates
// with decreasing terms, so the partial sum of `terms` terms is within the
// first omitted term of the limit.
AtanBounds atan_inverse_bounds(unsigned long x, unsigned long terms) {
  Integer lcm = 1;
  for (unsigned long k = 0; k < terms; ++k) {
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), 2 * k + 1);
  }
  const Integer x2 = Integer(x) * x;
  // Horner in x^2 over the common denominator lcm * x^(2 terms - 1).
  Integer numerator = 0;
  for (unsigned long k = 0; k < terms; ++k) {
    numerator *= x2;
    Integer c = lcm / (2 * k + 1);
    if (k % 2 == 1) c = -c;
    numerator += c;
  }
  Integer xpow;
  mpz_ui_pow_ui(xpow.get_mpz_t(), x, 2 * terms - 1);
  const Rational partial(numerator, lcm * xpow);

  Integer tail_den;
  mpz_ui_pow_ui(tail_den.get_mpz_t(), x, 2 * terms + 1);
  tail_den *= 2 * terms + 1;
  const Rational tail(Integer(1), tail_den);
  return {partial - tail, partial + tail};
}

// Smallest N with 1/((2N+1) x^(2N+1)) < 1/limit.
unsigned long terms_for(unsigned long x, const Integer& limit) {
  unsigned long n = 0;
  Integer xpow = x;  // x^(2n+1)
  while (Integer(xpow * (2 * n + 1)) <= limit) {
    ++n;
    xpow *= x * x;
  }
  return n;
}

}  // namespace

PiBounds machin_pi_bounds(int decimals) {
  if (decimals < 1) decimals = 1;
  Integer limit;
  // 16 * tail5 + 4 * tail239 < 10^-(decimals + 1)
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(decimals) + 3);
  const AtanBounds a5 = atan_inverse_bounds(5, terms_for(5, limit * 16));
  const AtanBounds a239 = atan_inverse_bounds(239, terms_for(239, limit * 4));
  const Rational lo = a5.lo * 16 - a239.hi * 4;
  const Rational hi = a5.hi * 16 - a239.lo * 4;
  // Snap outward to decimals + 1 places so the cached bounds stay small.
  const Rational scale = pow10(decimals + 1);
  const Rational unit = pow10(-(decimals + 1));
  return {Rational(floor(lo * scale)) * unit, Rational(ceil(hi * scale)) * unit};
}

PiEngine& PiEngine::global() {
  static PiEngine engine;
  return engine;
}

PiEngine::Enclosure PiEngine::enclosure_for(int decimals) {
  std::lock_guard lock(mutex_);
  if (cache_.decimals < decimals) {
    const int target = std::max(decimals, cache_.decimals + cache_.decimals / 2);
    PiBounds b = machin_pi_bounds(target);
    cache_ = Enclosure{target, std::move(b.lo), std::move(b.hi)};
  }
  return cache_;
}

std::optional<Rational> PiEngine::round_decided(const Enclosure& e,
                                                const Rational& scale,
                                                int n) const {
  // Both pi and pi/2 lie in [1, 10): n significant digits = n-1 places.
  const Rational shift = pow10(n - 1);
  const Integer lo = round_half_even(e.lo * scale * shift);
  const Integer hi = round_half_even(e.hi * scale * shift);
  if (lo != hi) return std::nullopt;
  return Rational(lo) / shift;
}

Rational PiEngine::pi_digits(int n) {
  if (n < 2) throw DomainError("pi_digits requires n >= 2");
  for (int decimals = n + 8;; decimals *= 2) {
    const Enclosure e = enclosure_for(decimals);
    if (auto v = round_decided(e, Rational(1), n)) return *v;
  }
}

PiApprox PiEngine::valp(int n) {
  if (n < 2) throw DomainError("valp requires n >= 2");
  const Rational half(1, 2);
  for (int decimals = n + 8;; decimals *= 2) {
    const Enclosure e = enclosure_for(decimals);
    if (auto v = round_decided(e, half, n)) {
      Rational err = max(*v - e.lo * half, e.hi * half - *v);
      return PiApprox{n, std::move(*v), std::move(err)};
    }
  }
}

int PiEngine::cached_decimals() const {
  std::lock_guard lock(mutex_);
  return cache_.decimals;
}

bool PiEngine::seed(const std::string& pi_decimal, int decimals) {
  Rational v;
  try {
    v = rational_from_decimal(pi_decimal);
  } catch (const ParseError&) {
    return false;
  }
  if (decimals < 2) return false;
  // A cache file is untrusted input: every claimed digit is checked against
  // an independent enclosure, and only that enclosure is cached.
  PiBounds check = machin_pi_bounds(decimals);
  const Rational unit = pow10(-decimals);
  if (v < check.lo - unit || v > check.hi + unit) return false;

  std::lock_guard lock(mutex_);
  if (decimals > cache_.decimals) {
    cache_ = Enclosure{decimals, std::move(check.lo), std::move(check.hi)};
  }
  return true;
}

std::string PiEngine::cache_text() const {
  std::lock_guard lock(mutex_);
  if (cache_.decimals < 2) return {};
  const Rational mid = (cache_.lo + cache_.hi) / 2;
  return format_fixed(mid, cache_.decimals - 1).str();
}

Rational pi_digits(int n) { return PiEngine::global().pi_digits(n); }

PiApprox valp(int n) { return PiEngine::global().valp(n); }

}  // namespace certrig
