#include "certrig/piecewise.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>

#include "certrig/errors.hpp"
#include "certrig/pointwise.hpp"

namespace certrig {
namespace {

// Every piece stays within this distance of its center.
const Rational kReach(4, 5);
const Rational kHalf(1, 2);

void require_interval(const Rational& a, const Rational& b, int r) {
  if (!(a < b)) throw DomainError("piecewise approximation requires a < b");
  if (r < 1) throw DomainError("piecewise approximation requires r >= 1");
}

// Taylor polynomials shared by every piece of one build.
struct Polys {
  explicit Polys(int n) : p(sin_taylor(n)), q(cos_taylor(n)) {}
  Polynomial p;
  Polynomial q;
  const Polynomial& of(Branch b) const { return b == Branch::kP ? p : q; }
};

Piece make_template(const Integer& k0, const Rational& pprime,
                    TrigFunction func, const Polys& polys) {
  Piece piece;
  piece.center = Rational(k0) * pprime;
  piece.lo = piece.center - pprime * kHalf;
  piece.hi = piece.center + pprime * kHalf;
  const bool odd = is_odd(k0);
  if (func == TrigFunction::kSin) {
    piece.kind = odd ? Branch::kQ : Branch::kP;
    piece.sign = sin_branch_sign(k0);
  } else {
    piece.kind = odd ? Branch::kP : Branch::kQ;
    piece.sign = cos_branch_sign(k0);
  }
  piece.poly = polys.of(piece.kind);
  return piece;
}

IntervalTemplate make_interval(const Rational& y, int m, TrigFunction func,
                               const Polys& polys) {
  if (y.is_zero()) throw DomainError("intv_approx requires y != 0");
  MultipleSelection s = select_multiple(y, m, Certify::kNearest);
  IntervalTemplate t;
  t.piece = make_template(s.k0, s.pprime, func, polys);
  t.pprime = std::move(s.pprime);
  t.k0 = std::move(s.k0);
  t.m = s.m;
  return t;
}

class PieceSink {
 public:
  explicit PieceSink(std::vector<Piece>& out) : out_(out) {}

  void emit(const Piece& tmpl, const Rational& lo, const Rational& hi) {
    // A generating point sitting exactly on (k + 1/2) p' leaves an empty
    // leading piece; drop it.
    if (lo == hi) return;
    if (hi < lo) throw std::logic_error("piecewise builder produced hi < lo");
    Piece p = tmpl;
    p.lo = lo;
    p.hi = hi;
    out_.push_back(std::move(p));
  }

 private:
  std::vector<Piece>& out_;
};

// PiecewiseFunctP for either function on 0 <= a < b.
PiecewiseApprox build_positive(TrigFunction func, const Rational& a,
                               const Rational& b, int r) {
  require_interval(a, b, r);
  if (a.sign() < 0) throw DomainError("positive builder requires a >= 0");

  PiecewiseApprox out;
  out.r = r;
  out.func = func;
  out.m_global = global_m(b, r);
  const Polys polys(piece_degree(r));
  PieceSink sink(out.pieces);

  Rational start = a;
  if (a < kReach) {
    Piece origin;
    origin.center = Rational(0);
    origin.kind = func == TrigFunction::kSin ? Branch::kP : Branch::kQ;
    origin.poly = polys.of(origin.kind);
    if (b <= kReach) {
      sink.emit(origin, a, b);
      return out;
    }
    sink.emit(origin, a, kReach);
    start = kReach;
  }

  const int m = out.m_global;
  const IntervalTemplate last = make_interval(b, m, func, polys);
  std::vector<IntervalTemplate> gen;
  gen.push_back(make_interval(start, m, func, polys));
  if (last.k0 <= gen.front().k0) {
    sink.emit(gen.front().piece, start, b);
    return out;
  }
  while (gen.back().k0 < last.k0) {
    const IntervalTemplate& prev = gen.back();
    const Integer expected = prev.k0 + 1;
    IntervalTemplate next =
        make_interval(Rational(expected) * prev.pprime, m, func, polys);
    if (next.k0 != expected) {
      throw std::logic_error("generating point did not advance k by one");
    }
    gen.push_back(std::move(next));
  }

  const std::size_t n_last = gen.size() - 1;
  auto cut = [&gen](std::size_t j) {
    return (Rational(gen[j].k0) + kHalf) * gen[j].pprime;
  };
  const Rational end =
      Rational(gen[n_last - 1].k0 + 1) * gen[n_last - 1].pprime;
  const bool tail = end < b;
  const std::size_t used = b <= cut(n_last - 1) ? n_last : n_last + 1;

  Rational lo = start;
  for (std::size_t j = 0; j < used; ++j) {
    Rational hi = j + 1 < used ? cut(j) : (tail ? end : b);
    sink.emit(gen[j].piece, lo, hi);
    lo = std::move(hi);
  }
  if (tail) sink.emit(last.piece, end, b);
  return out;
}

// x -> -x.  sin is odd: F(x) = -A(-x); cos is even: G(x) = A(-x).
PiecewiseApprox reflect(PiecewiseApprox f) {
  std::reverse(f.pieces.begin(), f.pieces.end());
  for (Piece& p : f.pieces) {
    Rational lo = -p.hi;
    p.hi = -p.lo;
    p.lo = std::move(lo);
    p.center = -p.center;
    // poly(-u) = -poly(u) for P, poly(u) for Q.
    const bool odd_poly = p.kind == Branch::kP;
    const bool odd_func = f.func == TrigFunction::kSin;
    if (odd_poly != odd_func) p.sign = -p.sign;
  }
  return f;
}

}  // namespace

std::string_view to_string(TrigFunction f) {
  return f == TrigFunction::kSin ? "sin" : "cos";
}

std::string_view to_string(Branch b) { return b == Branch::kP ? "P" : "Q"; }

TrigFunction parse_trig_function(std::string_view s) {
  if (s == "sin") return TrigFunction::kSin;
  if (s == "cos") return TrigFunction::kCos;
  throw ParseError("unknown function '" + std::string(s) + "' (sin|cos)");
}

Rational Piece::value(const Rational& x) const {
  return Rational(sign) * poly(x - center);
}

Polynomial Piece::expanded() const {
  // Horner in (x - center) over polynomials in x.
  const auto& c = poly.coefficients();
  std::vector<Rational> acc;
  for (auto i = c.size(); i-- > 0;) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * center;
    }
    next[0] += c[i];
    acc = std::move(next);
  }
  for (Rational& v : acc) v *= Rational(sign);
  return Polynomial(std::move(acc));
}

std::vector<Rational> PiecewiseApprox::breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < pieces.size(); ++i) out.push_back(pieces[i].lo);
  return out;
}

int global_m(const Rational& b, int r) {
  if (b.sign() <= 0) throw DomainError("global_m requires b > 0");
  if (r < 1) throw DomainError("global_m requires r >= 1");
  const Rational bound =
      (Rational(b * 2 + 4) * pow10(r + 1)).reciprocal();
  int m = r + 1;
  while (bound < pow10(-m)) ++m;
  return m;
}

int interval_global_m(const Rational& a, const Rational& b, int r) {
  require_interval(a, b, r);
  if (a.sign() >= 0) return global_m(b, r);
  if (b.sign() <= 0) return global_m(-a, r);
  return std::max(global_m(-a, r), global_m(b, r));
}

int piece_degree(int r) {
  if (r < 1) throw DomainError("piece_degree requires r >= 1");
  const Rational threshold = pow10(-(r + 1));
  return min_degree([](int n) { return remainder_bound(kReach, n); }, threshold);
}

IntervalTemplate intv_approx(const Rational& y, int m, int r,
                             TrigFunction func) {
  return make_interval(y, m, func, Polys(piece_degree(r)));
}

PiecewiseApprox piecewise_sin_pos(const Rational& a, const Rational& b, int r) {
  return build_positive(TrigFunction::kSin, a, b, r);
}

PiecewiseApprox piecewise(TrigFunction func, const Rational& a,
                          const Rational& b, int r) {
  require_interval(a, b, r);
  if (a.sign() >= 0) return build_positive(func, a, b, r);
  if (b.sign() <= 0) return reflect(build_positive(func, -b, -a, r));
  PiecewiseApprox out = reflect(build_positive(func, Rational(0), -a, r));
  PiecewiseApprox right = build_positive(func, Rational(0), b, r);
  out.m_global = std::max(out.m_global, right.m_global);
  std::move(right.pieces.begin(), right.pieces.end(),
            std::back_inserter(out.pieces));
  return out;
}

PiecewiseApprox piecewise_sin(const Rational& a, const Rational& b, int r) {
  return piecewise(TrigFunction::kSin, a, b, r);
}

PiecewiseApprox piecewise_cos(const Rational& a, const Rational& b, int r) {
  return piecewise(TrigFunction::kCos, a, b, r);
}

std::size_t locate_piece(const PiecewiseApprox& f, const Rational& x) {
  if (f.pieces.empty()) throw DomainError("empty piecewise approximation");
  if (x < f.a() || x > f.b()) {
    throw DomainError("x lies outside the approximation interval");
  }
  const auto it = std::upper_bound(
      f.pieces.begin(), f.pieces.end(), x,
      [](const Rational& v, const Piece& p) { return v < p.lo; });
  return static_cast<std::size_t>(std::distance(f.pieces.begin(), it)) - 1;
}

Rational eval_piecewise(const PiecewiseApprox& f, const Rational& x) {
  return f.pieces[locate_piece(f, x)].value(x);
}

}  // namespace certrig
