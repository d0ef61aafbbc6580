#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "certrig/altschemes.hpp"
#include "certrig/errors.hpp"
#include "certrig/oracle.hpp"
#include "certrig/pi.hpp"
#include "certrig/piecewise.hpp"
#include "certrig/pointwise.hpp"
#include "certrig/rational.hpp"

namespace certrig::cli {
namespace {

constexpr const char* kPiCacheEnv = "CERTRIG_PI_CACHE";

// Raised for malformed flag values after CLI11 accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<int> int_list_flag(const std::string& name, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--" + name + ": expected a comma-separated list of integers");
    }
  }
  if (out.empty()) throw UsageError("--" + name + ": empty list");
  return out;
}

void load_pi_cache() {
  const char* path = std::getenv(kPiCacheEnv);
  if (path == nullptr || *path == '\0') return;
  std::ifstream in(path);
  if (!in) return;
  int decimals = 0;
  std::string digits;
  if (in >> decimals >> digits) PiEngine::global().seed(digits, decimals);
}

void store_pi_cache(int loaded_decimals) {
  const char* path = std::getenv(kPiCacheEnv);
  if (path == nullptr || *path == '\0') return;
  PiEngine& engine = PiEngine::global();
  if (engine.cached_decimals() <= loaded_decimals) return;
  const std::string text = engine.cache_text();
  if (text.empty()) return;
  std::ofstream outf(path, std::ios::trunc);
  outf << engine.cached_decimals() - 1 << '\n' << text << '\n';
}

// Values shared by the subcommands; CLI11 binds into these.
struct Flags {
  std::string y, a, b;
  int r = 0;
  int k = 0;
  int digits = -1;
  int samples = 0;
  int jobs = 1;
  std::string func = "sin";
  std::string piece_out = "summary";
  std::string plot_out = "csv";
  std::string table_out = "md";
  std::string rs = "10,20,50,100,200";
  bool expand = false;
};

std::string header(const std::string& name, const CLI::App& sub) {
  std::string h = "# certrig " + name;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_name() == "--help") continue;
    const bool takes_value = opt->get_expected_min() > 0;
    if (opt->count() == 0) {
      // Defaulted values are echoed as well.
      if (!takes_value || opt->get_default_str().empty()) continue;
      h += " " + opt->get_name() + " " + opt->get_default_str();
      continue;
    }
    h += " " + opt->get_name();
    if (takes_value) h += " " + opt->as<std::string>();
  }
  return h;
}

int frac_digits(const Flags& f, int fallback) {
  return f.digits >= 0 ? f.digits : fallback;
}

void print_piece_summary(std::ostream& out, const PiecewiseApprox& f,
                         int digits, bool expand) {
  out << f.pieces.size() << " pieces\n";
  out << "breakpoints:";
  for (const Rational& bp : f.breakpoints()) out << ' ' << format_fixed(bp, digits);
  out << '\n';
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const Piece& p = f.pieces[i];
    const bool last = i + 1 == f.pieces.size();
    out << '[' << format_fixed(p.lo, digits) << ", " << format_fixed(p.hi, digits)
        << (last ? "]" : ")") << " center=" << format_fixed(p.center, digits)
        << " kind=" << to_string(p.kind) << " sign=" << (p.sign > 0 ? "+1" : "-1")
        << " degree=" << p.poly.degree() << '\n';
    if (expand) {
      const Polynomial e = p.expanded();
      const auto& c = e.coefficients();
      for (auto d = c.size(); d-- > 0;) {
        out << "  x^" << d << ": " << format_fixed(c[d], digits) << '\n';
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Certified sin/cos evaluation and piecewise approximation", "certrig"};
  app.require_subcommand(1);
  Flags f;
  std::map<std::string, std::function<void(const CLI::App&)>> actions;

  auto add_yr = [&f](CLI::App* sub) {
    sub->add_option("--y", f.y, "Rational argument (decimal or num/den)")->required();
    sub->add_option("--r", f.r, "Accuracy 10^-r")->required()->check(CLI::PositiveNumber);
  };
  auto add_digits = [&f](CLI::App* sub) {
    sub->add_option("--digits", f.digits, "Fractional digits printed (default r+2)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_interval = [&f](CLI::App* sub) {
    sub->add_option("--a", f.a, "Left endpoint")->required();
    sub->add_option("--b", f.b, "Right endpoint")->required();
    sub->add_option("--r", f.r, "Accuracy 10^-r")->required()->check(CLI::PositiveNumber);
  };
  auto add_func = [&f](CLI::App* sub) {
    sub->add_option("--func", f.func, "sin or cos")->capture_default_str()->check(CLI::IsMember({"sin", "cos"}));
  };

  for (const char* name : {"sin", "cos"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("Certified ") + name + "(y)");
    add_yr(sub);
    add_digits(sub);
    const bool is_sin = std::string(name) == "sin";
    actions[name] = [&, is_sin](const CLI::App& s) {
      const Rational y = rational_flag("y", f.y);
      const Rational v = is_sin ? sin_point(y, f.r) : cos_point(y, f.r);
      out << header(s.get_name(), s) << '\n' << format_fixed(v, frac_digits(f, f.r + 2)) << '\n';
    };
  }

  {
    CLI::App* sub = app.add_subcommand("sin-triple", "sin(y) via the triple-angle compositions");
    add_yr(sub);
    add_digits(sub);
    actions["sin-triple"] = [&](const CLI::App& s) {
      const Rational v = sin_point_triple(rational_flag("y", f.y), f.r);
      out << header(s.get_name(), s) << '\n' << format_fixed(v, frac_digits(f, f.r + 2)) << '\n';
    };
  }

  {
    CLI::App* sub = app.add_subcommand("sin-pi-over-k", "Certified sin(pi/k)");
    sub->add_option("--k", f.k, "Integer k >= 2")->required();
    sub->add_option("--r", f.r, "Accuracy 10^-r")->required()->check(CLI::PositiveNumber);
    add_digits(sub);
    actions["sin-pi-over-k"] = [&](const CLI::App& s) {
      const Rational v = sin_pi_over_k(f.k, f.r);
      out << header(s.get_name(), s) << '\n' << format_fixed(v, frac_digits(f, f.r + 2)) << '\n';
    };
  }

  {
    CLI::App* sub = app.add_subcommand("reduce", "Show the argument reduction for (y, r)");
    add_yr(sub);
    actions["reduce"] = [&](const CLI::App& s) {
      const Rational y = rational_flag("y", f.y);
      const Reduction red = reduce(y, f.r);
      out << header(s.get_name(), s) << '\n'
          << "m=" << red.m << '\n'
          << "pprime_digits=" << red.m + 2 << '\n'
          << "pprime=" << format_fixed(red.pprime, red.m + 1) << '\n'
          << "k0=" << red.k0.get_str() << '\n'
          << "n=" << red.n << '\n'
          << "t=" << format_fixed(red.t, 20) << '\n'
          << "u=" << format_fixed(red.reduced(y), 20) << '\n';
    };
  }

  {
    CLI::App* sub = app.add_subcommand("piecewise", "Build a piecewise approximant on [a, b]");
    add_interval(sub);
    add_func(sub);
    sub->add_option("--out", f.piece_out, "json or summary")->capture_default_str()->check(CLI::IsMember({"json", "summary"}));
    add_digits(sub);
    sub->add_flag("--expand", f.expand, "Also print coefficients expanded in powers of x");
    actions["piecewise"] = [&](const CLI::App& s) {
      const PiecewiseApprox pw = piecewise(parse_trig_function(f.func),
                                           rational_flag("a", f.a),
                                           rational_flag("b", f.b), f.r);
      if (f.piece_out == "json") {
        // JSON has no comment syntax; the header travels as a field.
        nlohmann::json doc = nlohmann::json::parse(to_json(pw));
        doc["command"] = header(s.get_name(), s).substr(2);
        out << doc.dump() << '\n';
        return;
      }
      out << header(s.get_name(), s) << '\n';
      print_piece_summary(out, pw, frac_digits(f, 10), f.expand);
    };
  }

  {
    CLI::App* sub = app.add_subcommand("plot", "Sample a piecewise approximant as CSV");
    add_interval(sub);
    add_func(sub);
    sub->add_option("--samples", f.samples, "Number of rows")->required()->check(CLI::Range(2, 10000000));
    sub->add_option("--out", f.plot_out, "csv")->capture_default_str()->check(CLI::IsMember({"csv"}));
    add_digits(sub);
    actions["plot"] = [&](const CLI::App& s) {
      const PiecewiseApprox pw = piecewise(parse_trig_function(f.func),
                                           rational_flag("a", f.a),
                                           rational_flag("b", f.b), f.r);
      const int digits = frac_digits(f, f.r + 2);
      out << header(s.get_name(), s) << '\n' << "x,F(x)\n";
      for (const Rational& x : sample_points(pw.a(), pw.b(), f.samples)) {
        out << format_fixed(x, digits) << ',' << format_fixed(eval_piecewise(pw, x), digits) << '\n';
      }
    };
  }

  {
    CLI::App* sub = app.add_subcommand("degree-table", "Minimal degrees of the Taylor and triple-angle schemes");
    sub->add_option("--rs", f.rs, "Comma-separated accuracies")->capture_default_str();
    sub->add_option("--out", f.table_out, "md or csv")->capture_default_str()->check(CLI::IsMember({"md", "csv"}));
    actions["degree-table"] = [&](const CLI::App& s) {
      const std::vector<int> rs = int_list_flag("rs", f.rs);
      for (int r : rs) {
        if (r < 1) throw UsageError("--rs: accuracies must be positive");
      }
      const auto rows = degree_table(rs);
      out << header(s.get_name(), s) << '\n';
      if (f.table_out == "csv") {
        out << "r,n_eps1,3n_eps1,n_eps2,2n_eps2,n_eps0\n";
        for (const DegreeRow& row : rows) {
          out << row.r << ',' << row.n_eps1 << ',' << row.degree_eps1 << ','
              << row.n_eps2 << ',' << row.degree_eps2 << ',' << row.n_eps0 << '\n';
        }
        return;
      }
      out << "| r | eps1: n | eps1: 3n | eps2: n | eps2: 2n | eps0: n |\n"
          << "|---|---|---|---|---|---|\n";
      for (const DegreeRow& row : rows) {
        out << "| " << row.r << " | " << row.n_eps1 << " | " << row.degree_eps1
            << " | " << row.n_eps2 << " | " << row.degree_eps2 << " | "
            << row.n_eps0 << " |\n";
      }
    };
  }

  {
    CLI::App* sub = app.add_subcommand("pi", "pi and pi/2 to n significant digits");
    sub->add_option("--digits", f.digits, "Significant digits (>= 2)")->required();
    actions["pi"] = [&](const CLI::App& s) {
      const Rational pi = pi_digits(f.digits);
      const PiApprox half = valp(f.digits);
      out << header(s.get_name(), s) << '\n'
          << "pi=" << format_fixed(pi, f.digits - 1) << '\n'
          << "pi/2=" << format_fixed(half.value, f.digits - 1) << '\n';
    };
  }

  {
    CLI::App* sub = app.add_subcommand("verify", "Scan a piecewise approximant against the oracle");
    add_interval(sub);
    add_func(sub);
    sub->add_option("--samples", f.samples, "Sample count")->required()->check(CLI::Range(2, 10000000));
    sub->add_option("--jobs", f.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    actions["verify"] = [&](const CLI::App& s) {
      const PiecewiseApprox pw = piecewise(parse_trig_function(f.func),
                                           rational_flag("a", f.a),
                                           rational_flag("b", f.b), f.r);
      const Rational worst = max_error_scan(pw, f.samples, f.jobs);
      const bool pass = worst < pow10(-f.r);
      out << header(s.get_name(), s) << '\n'
          << "pieces=" << pw.pieces.size() << '\n'
          << "max_error=" << format_fixed(worst, f.r + 5) << '\n'
          << (pass ? "PASS" : "FAIL") << " max_error < 1e-" << f.r << '\n';
    };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "certrig: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  int loaded = 0;
  try {
    load_pi_cache();
    loaded = PiEngine::global().cached_decimals();
    actions.at(chosen->get_name())(*chosen);
    store_pi_cache(loaded);
  } catch (const UsageError& e) {
    err << "certrig: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "certrig: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "certrig: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace certrig::cli
