#include "certrig/taylor.hpp"

#include <mutex>
#include <string>
#include <utility>

#include "certrig/errors.hpp"

namespace certrig {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  for (const Rational& c : coeffs_) {
    mpz_lcm(common_den_.get_mpz_t(), common_den_.get_mpz_t(),
            c.mpq().get_den_mpz_t());
  }
  scaled_.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) {
    scaled_.push_back(c.numerator() * (common_den_ / c.denominator()));
  }
}

Rational Polynomial::operator()(const Rational& x) const {
  if (coeffs_.empty()) return Rational(0);
  const mpz_class& a = x.mpq().get_num();
  const mpz_class& b = x.mpq().get_den();
  Integer acc = scaled_.back();
  Integer bpow = 1;
  for (auto i = coeffs_.size() - 1; i-- > 0;) {
    bpow *= b;
    acc *= a;
    if (scaled_[i] != 0) acc += scaled_[i] * bpow;
  }
  return Rational(acc, common_den_ * bpow);
}

Rational eval(const Polynomial& poly, const Rational& x) { return poly(x); }

namespace {

std::mutex factorial_mutex;
std::vector<Integer> factorial_cache{Integer(1)};

}  // namespace

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  std::lock_guard lock(factorial_mutex);
  while (static_cast<int>(factorial_cache.size()) <= n) {
    const auto k = factorial_cache.size();
    factorial_cache.push_back(factorial_cache.back() * static_cast<unsigned long>(k));
  }
  return factorial_cache[static_cast<std::size_t>(n)];
}

Polynomial sin_taylor(int n) {
  if (n < 0) throw DomainError("sin_taylor requires n >= 0");
  if (n == 0) return Polynomial{};
  const int last = (n - 1) / 2;
  std::vector<Rational> c(static_cast<std::size_t>(2 * last + 2), Rational(0));
  for (int m = 0; m <= last; ++m) {
    c[static_cast<std::size_t>(2 * m + 1)] =
        Rational(Integer(m % 2 == 0 ? 1 : -1), factorial(2 * m + 1));
  }
  return Polynomial(std::move(c));
}

Polynomial cos_taylor(int n) {
  if (n < 0) throw DomainError("cos_taylor requires n >= 0");
  const int last = n / 2;
  std::vector<Rational> c(static_cast<std::size_t>(2 * last + 1), Rational(0));
  for (int m = 0; m <= last; ++m) {
    c[static_cast<std::size_t>(2 * m)] =
        Rational(Integer(m % 2 == 0 ? 1 : -1), factorial(2 * m));
  }
  return Polynomial(std::move(c));
}

Rational remainder_bound(const Rational& y_abs, int n) {
  if (y_abs.sign() < 0) throw DomainError("remainder_bound requires y_abs >= 0");
  if (n < 0) throw DomainError("remainder_bound requires n >= 0");
  return pow(y_abs, static_cast<unsigned>(n + 1)) / Rational(factorial(n + 1));
}

int min_degree(const DegreeBound& bound, const Rational& threshold) {
  for (int n = 0; n <= kMaxDegree; ++n) {
    if (bound(n) < threshold) return n;
  }
  throw NonTerminationError("min_degree: no degree below " +
                            std::to_string(kMaxDegree) + " meets the threshold");
}

int min_remainder_degree(const Rational& y_abs, const Rational& threshold) {
  if (y_abs.sign() < 0) {
    throw DomainError("min_remainder_degree requires y_abs >= 0");
  }
  if (threshold.sign() <= 0) {
    throw NonTerminationError("min_remainder_degree: threshold must be positive");
  }
  // y^(n+1) / (n+1)! < t_num / t_den  <=>  p^(n+1) t_den < q^(n+1) (n+1)! t_num
  // with y = p / q; both sides are grown by one factor per degree.
  const Integer p = y_abs.numerator();
  const Integer q = y_abs.denominator();
  Integer lhs = p * threshold.denominator();
  Integer rhs = q * threshold.numerator();
  for (int n = 0; n <= kMaxDegree; ++n) {
    if (lhs < rhs) return n;
    lhs *= p;
    rhs *= q * (n + 2);
  }
  throw NonTerminationError("min_remainder_degree: no degree below " +
                            std::to_string(kMaxDegree) + " meets the threshold");
}

}  // namespace certrig
