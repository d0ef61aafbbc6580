#pragma once

// Certified rational approximations of pi and p = pi/2.

#include <mutex>
#include <optional>
#include <string>

#include "certrig/rational.hpp"

namespace certrig {

// p = pi/2 rounded to `digits` significant digits, with a bound on the
// rounding error.  |p - value| <= err_bound <= 0.5 * 10^(1 - digits).
struct PiApprox {
  int digits = 0;
  Rational value;
  Rational err_bound;
};

// Thread-safe store of a rational enclosure lo <= pi <= hi.  The enclosure
// only ever tightens; callers see the same digits whether or not a wider
// computation already happened.
class PiEngine {
 public:
  PiEngine() = default;
  PiEngine(const PiEngine&) = delete;
  PiEngine& operator=(const PiEngine&) = delete;

  static PiEngine& global();

  // pi rounded half-even to n significant digits.  n >= 2.
  Rational pi_digits(int n);
  // valp[n](p) for p = pi/2.  n >= 2.
  PiApprox valp(int n);

  // Number of certified fractional decimal places currently cached.
  int cached_decimals() const;

  // Seeds the cache from a decimal string of pi carrying `decimals`
  // fractional digits (truncated or rounded; error < 10^-decimals).  Every
  // digit is checked against an independent enclosure; returns false and
  // leaves the cache untouched if they disagree.
  bool seed(const std::string& pi_decimal, int decimals);
  // Decimal string of pi to one place fewer than cached_decimals().
  std::string cache_text() const;

 private:
  struct Enclosure {
    int decimals = 0;
    Rational lo;
    Rational hi;
  };

  Enclosure enclosure_for(int decimals);
  // Returns the rounding of x * scale to n significant digits, if the
  // enclosure decides it; used for both pi and pi/2.
  std::optional<Rational> round_decided(const Enclosure& e,
                                        const Rational& scale, int n) const;

  mutable std::mutex mutex_;
  Enclosure cache_;
};

// Machin series pi = 16 atan(1/5) - 4 atan(1/239), summed exactly.  Returns
// lo <= pi <= hi with hi - lo < 10^-decimals.
struct PiBounds {
  Rational lo;
  Rational hi;
};
PiBounds machin_pi_bounds(int decimals);

Rational pi_digits(int n);
PiApprox valp(int n);

}  // namespace certrig
