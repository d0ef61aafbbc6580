// Acceptance suite: one PASS/FAIL line per criterion at its pinned
// tolerance and time limit.  Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "certrig/altschemes.hpp"
#include "certrig/oracle.hpp"
#include "certrig/pi.hpp"
#include "certrig/piecewise.hpp"
#include "certrig/pointwise.hpp"
#include "certrig/taylor.hpp"
#include "cli.hpp"
#include "piecewise_checks.hpp"
#include "test_support.hpp"

namespace certrig {
namespace {

using testing::dec;
using testing::RationalGen;

// Collects failures for one criterion; prints at most a few of them.
class Report {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (failures_ <= 8) details_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  int failures() const { return failures_; }
  const std::vector<std::string>& details() const { return details_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int failures_ = 0;
  std::vector<std::string> details_;
  std::vector<std::string> notes_;
};

std::string sci(const Rational& x) {
  if (x.is_zero()) return "0";
  int e = 0;
  Rational v = x.abs();
  while (v >= Rational(10)) {
    v /= Rational(10);
    ++e;
  }
  while (v < Rational(1)) {
    v *= Rational(10);
    --e;
  }
  std::string mant = format_fixed(v, 2).str();
  if (mant == "10.00") {
    mant = "1.00";
    ++e;
  }
  return mant + "e" + std::to_string(e);
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Report&)> body;
};

// 1. sin(pi/k) table through the CLI.
void sin_pi_over_k_table(Report& rep) {
  for (const auto& row : testing::sin_pi_over_k_table()) {
    std::ostringstream out, err;
    const int code = cli::run({"sin-pi-over-k", "--k", std::to_string(row.k), "--r",
                               std::to_string(row.r)},
                              out, err);
    const std::string tag = "(k=" + std::to_string(row.k) + ", r=" + std::to_string(row.r) + ")";
    if (code != 0) {
      rep.fail(tag + " exit " + std::to_string(code) + ": " + err.str());
      continue;
    }
    std::string text = out.str();
    text.pop_back();
    const Rational got = dec(text.substr(text.rfind('\n') + 1).c_str());
    const Rational truth = oracle_sin(valp(row.r + 12).value * Rational(2) / Rational(row.k),
                                      row.r + 10);
    // truth is within 10^-(r+10) + 2 * 10^-(r+11)/k of sin(pi/k).
    const Rational err_true = (got - truth).abs();
    const Rational err_paper = (got - dec(row.printed)).abs();
    rep.check(err_true + Rational(2) * pow10(-(row.r + 10)) < pow10(-row.r),
              tag + " |out - sin(pi/k)| = " + sci(err_true));
    rep.check(err_paper < Rational(2) * pow10(-row.r),
              tag + " |out - printed| = " + sci(err_paper) + " (printed " + row.printed + ")");
    rep.note(tag + " |out - sin| = " + sci(err_true) + ", |out - printed| = " + sci(err_paper));
  }
}

// 2. First worked example on [-3.1416, 3.1416], r = 12.
void first_example(Report& rep) {
  const PiecewiseApprox f = piecewise_sin(dec("-3.1416"), dec("3.1416"), 12);
  rep.check(f.pieces.size() == 8, "piece count " + std::to_string(f.pieces.size()));
  const char* printed[] = {"-3.141592654", "-2.356194490", "-0.8", "0",
                           "0.8", "2.356194490", "3.141592654"};
  const auto brk = f.breakpoints();
  if (brk.size() == 7) {
    for (int i = 0; i < 7; ++i) {
      rep.check((brk[i] - dec(printed[i])).abs() < pow10(-9),
                std::string("breakpoint ") + printed[i] + " got " + format_fixed(brk[i], 12).str());
    }
  }
  const Rational f25 = eval_piecewise(f, Rational(5, 2));
  const Rational f31 = eval_piecewise(f, Rational(31, 10));
  rep.check((f25 - dec(testing::kSin2_5)).abs() < pow10(-12), "|F(2.5) - sin 2.5|");
  rep.check((f25 - dec("0.598472144105")).abs() < Rational(2) * pow10(-12),
            "|F(2.5) - 0.598472144105|");
  rep.check((f31 - dec("0.0415806624335")).abs() < Rational(2) * pow10(-12),
            "|F(3.1) - 0.0415806624335|");
  rep.note("F(2.5) = " + format_fixed(f25, 14).str() + ", F(3.1) = " + format_fixed(f31, 15).str());
}

// 3. Second worked example: 66 and 258 pieces, F1(49).
void second_example(Report& rep) {
  const PiecewiseApprox f1 = piecewise_sin(Rational(-50), Rational(50), 50);
  rep.check(f1.pieces.size() == 66, "[-50,50] piece count " + std::to_string(f1.pieces.size()));
  const Rational v = eval_piecewise(f1, Rational(49));
  const Rational d = (v - dec(testing::kF1At49Printed)).abs();
  const Rational e = (v - dec(testing::kSin49)).abs();
  rep.check(e < pow10(-50), "|F1(49) - sin 49| = " + sci(e));
  rep.check(d < Rational(2) * pow10(-50), "|F1(49) - printed| = " + sci(d));
  const PiecewiseApprox f2 = piecewise_sin(Rational(-200), Rational(200), 200);
  rep.check(f2.pieces.size() == 258,
            "[-200,200] piece count " + std::to_string(f2.pieces.size()));
  rep.note("pieces 66/258: " + std::to_string(f1.pieces.size()) + "/" +
           std::to_string(f2.pieces.size()) + ", |F1(49) - sin 49| = " + sci(e) +
           ", |F1(49) - printed| = " + sci(d));
}

// 4. Degree table.
void degree_table_rows(Report& rep) {
  const std::vector<int> rs = {10, 20, 50, 100, 200};
  const int expected[5][3] = {{9, 11, 12}, {15, 18, 20}, {30, 35, 39},
                              {53, 61, 66}, {94, 106, 115}};
  const auto rows = degree_table(rs);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const DegreeRow& row = rows.at(i);
    const std::string tag = "r=" + std::to_string(rs[i]);
    rep.check(row.n_eps1 == expected[i][0], tag + " eps1 n=" + std::to_string(row.n_eps1));
    rep.check(row.n_eps2 == expected[i][1], tag + " eps2 n=" + std::to_string(row.n_eps2));
    rep.check(row.n_eps0 == expected[i][2], tag + " eps0 n=" + std::to_string(row.n_eps0));
    rep.check(row.degree_eps1 == 3 * row.n_eps1 && row.degree_eps2 == 2 * row.n_eps2,
              tag + " composite degree columns");
  }
}

struct Sample {
  Rational y;
  int r;
};

const std::vector<Sample>& random_points() {
  static const std::vector<Sample> pts = [] {
    RationalGen gen(20261019);
    std::vector<Sample> out;
    for (int i = 0; i < 1000; ++i) {
      Rational y = gen.nonzero(Rational(-300), Rational(300));
      out.push_back({std::move(y), gen.integer(5, 60)});
    }
    return out;
  }();
  return pts;
}

// 5. Reduction invariants.
void reduction_properties(Report& rep) {
  const Rational reach(4, 5);
  for (const auto& [y, r] : random_points()) {
    const Reduction red = reduce(y, r);
    const Rational p_oracle = valp(red.m + 50).value;
    const std::string tag = "y=" + y.fraction_string() + " r=" + std::to_string(r);
    rep.check(floor(y / red.pprime) == floor(y / p_oracle), tag + " floor invariance");
    const Rational u = red.reduced(y).abs();
    rep.check(u <= red.pprime / Rational(2) && red.pprime / Rational(2) < reach,
              tag + " reduced-argument bound");
    rep.check(remainder_bound(u, red.n) < pow10(-(r + 1)), tag + " remainder bound");
  }
}

// 6. Pointwise accuracy and path agreement.
void accuracy_properties(Report& rep) {
  Rational worst_sin = 0, worst_cos = 0, worst_triple = 0;
  for (const auto& [y, r] : random_points()) {
    const std::string tag = "y=" + y.fraction_string() + " r=" + std::to_string(r);
    const Rational scale = pow10(r);
    const Rational s = sin_point(y, r);
    const Rational es = (s - oracle_sin(y, r + 5)).abs();
    const Rational ec = (cos_point(y, r) - oracle_cos(y, r + 5)).abs();
    const Rational et = (sin_point_triple(y, r) - s).abs();
    rep.check(es < pow10(-r), tag + " sin error " + sci(es));
    rep.check(ec < pow10(-r), tag + " cos error " + sci(ec));
    rep.check(et < Rational(2) * pow10(-r), tag + " triple/direct gap " + sci(et));
    worst_sin = max(worst_sin, es * scale);
    worst_cos = max(worst_cos, ec * scale);
    worst_triple = max(worst_triple, et * scale);
  }
  rep.note("worst error / 10^-r: sin " + sci(worst_sin) + ", cos " + sci(worst_cos) +
           ", triple-vs-direct " + sci(worst_triple));
}

// 7. Piecewise structure on five random instances.
void piecewise_properties(Report& rep) {
  RationalGen gen(77001);
  struct Instance {
    TrigFunction func;
    Rational a, b;
    int r;
    std::string label;
  };
  std::vector<Instance> cases;
  // a < 0 < b.
  cases.push_back({TrigFunction::kSin, gen.in(Rational(-40), Rational(-1), 997),
                   gen.in(Rational(1), Rational(40), 997), gen.integer(8, 30), "sin a<0<b"});
  // Entirely positive.
  {
    Rational a = gen.in(Rational(0), Rational(20), 997);
    Rational b = a + gen.nonzero(Rational(0), Rational(40), 997);
    cases.push_back({TrigFunction::kSin, a, b, gen.integer(8, 30), "sin positive"});
  }
  // Entirely negative, cosine.
  {
    Rational b = gen.in(Rational(-20), Rational(0), 997);
    Rational a = b - gen.nonzero(Rational(0), Rational(40), 997);
    cases.push_back({TrigFunction::kCos, a, b, gen.integer(8, 30), "cos negative"});
  }
  // Cosine across the origin.
  cases.push_back({TrigFunction::kCos, gen.in(Rational(-30), Rational(-1), 997),
                   gen.in(Rational(1), Rational(30), 997), gen.integer(8, 30), "cos a<0<b"});
  // Narrow interval: a and b reduce to the same multiple (k0 >= n0).
  {
    const int r = gen.integer(8, 30);
    const int k = gen.integer(2, 30);
    const Rational p = valp(global_m(Rational(k + 1), r) + 2).value;
    const Rational center = Rational(k) * p;
    const Rational a = center + gen.in(Rational(-1, 4), Rational(0), 997);
    const Rational b = center + gen.nonzero(Rational(0), Rational(1, 4), 997);
    cases.push_back({TrigFunction::kSin, a, b, r, "sin narrow k0>=n0"});
  }

  for (const Instance& c : cases) {
    const PiecewiseApprox f = piecewise(c.func, c.a, c.b, c.r);
    const std::string tag = c.label + " [" + testing::show(c.a) + ", " + testing::show(c.b) +
                            "] r=" + std::to_string(c.r);
    rep.check(f.a() == c.a && f.b() == c.b, tag + " endpoints");
    for (const auto& v : testing::tiling_violations(f)) rep.fail(tag + " tiling: " + v);
    for (const auto& v : testing::seam_violations(f)) rep.fail(tag + " seam: " + v);
    for (const auto& v : testing::reach_violations(f)) rep.fail(tag + " reach: " + v);
    if (c.label == "sin narrow k0>=n0") {
      rep.check(f.pieces.size() == 1, tag + " expected a single piece");
    }
    const Rational e = max_error_scan(f, 1000);
    rep.check(e < pow10(-c.r), tag + " max_error_scan " + sci(e));
    rep.note(tag + ": " + std::to_string(f.pieces.size()) + " pieces, max error " + sci(e));
  }
}

// 8. Soundness of the triple-angle bounds.
void bound_soundness(Report& rep) {
  RationalGen gen(88008);
  const Rational reach(4, 5);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Rational y = gen.in(-reach, reach);
    const int n = gen.integer(2, 40);
    const Rational y_abs = y.abs();
    const std::string tag = "y=" + y.fraction_string() + " n=" + std::to_string(n);
    if (y.is_zero()) {
      rep.check(small_sin_34(y, n).is_zero() && small_sin_35(y, n).is_zero() &&
                    small_cos_40(y, n) == Rational(1),
                tag + " exact at zero");
      continue;
    }
    // r = decimal places certified by the weakest of the three bounds.
    const Rational weakest = max(eps1(y_abs, n), max(eps2(y_abs, n), omega1(y_abs, n)));
    int r = 0;
    while (pow10(-(r + 1)) > weakest) ++r;
    const int digits = std::max(2 * r, r + 20);
    const Rational slack = pow10(-digits);
    const Rational s = oracle_sin(y, digits);
    const Rational c = oracle_cos(y, digits);
    // |approx - oracle| + slack <= bound proves |approx - true| <= bound.
    rep.check((small_sin_34(y, n) - s).abs() + slack <= eps1(y_abs, n), tag + " eq34/eps1");
    rep.check((small_sin_35(y, n) - s).abs() + slack <= eps2(y_abs, n), tag + " eq35/eps2");
    rep.check((small_cos_40(y, n) - c).abs() + slack <= omega1(y_abs, n), tag + " eq40/omega1");
    ++checked;
  }
  rep.note(std::to_string(checked) + " nonzero samples x 3 compositions");
}

}  // namespace
}  // namespace certrig

int main() {
  using namespace certrig;
  const std::vector<Criterion> criteria = {
      {1, "sin(pi/k) table", 5.0, sin_pi_over_k_table},
      {2, "piecewise [-3.1416, 3.1416], r=12", 10.0, first_example},
      {3, "piecewise [-50,50] r=50 and [-200,200] r=200", 300.0, second_example},
      {4, "degree table", 30.0, degree_table_rows},
      {5, "reduction properties (1000 points)", 0.0, reduction_properties},
      {6, "pointwise accuracy properties (1000 points)", 0.0, accuracy_properties},
      {7, "piecewise structure (5 instances)", 0.0, piecewise_properties},
      {8, "triple-angle bound soundness (200 samples)", 0.0, bound_soundness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(rep);
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      rep.fail("runtime " + std::to_string(secs) + " s exceeds limit");
    }
    const bool ok = rep.failures() == 0;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " ["
              << timing;
    if (c.limit_seconds > 0) std::cout << " / limit " << c.limit_seconds << "s";
    std::cout << "]";
    if (!ok) std::cout << " (" << rep.failures() << " failed checks)";
    std::cout << "\n";
    for (const auto& n : rep.notes()) std::cout << "        " << n << "\n";
    for (const auto& d : rep.details()) std::cout << "        FAILED: " << d << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL")
            << "\n";
  return failed == 0 ? 0 : 1;
}
