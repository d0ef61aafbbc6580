#include <string>
#include <utility>
#include <vector>

#include "certrig/errors.hpp"
#include "certrig/piecewise.hpp"
#include "json.hpp"

namespace certrig {

using nlohmann::json;

std::string to_json(const PiecewiseApprox& f, int indent) {
  json doc;
  doc["func"] = std::string(to_string(f.func));
  doc["r"] = f.r;
  doc["a"] = f.a().fraction_string();
  doc["b"] = f.b().fraction_string();
  json pieces = json::array();
  for (const Piece& p : f.pieces) {
    json coeffs = json::array();
    for (const Rational& c : p.poly.coefficients()) {
      coeffs.push_back(c.fraction_string());
    }
    pieces.push_back({{"lo", p.lo.fraction_string()},
                      {"hi", p.hi.fraction_string()},
                      {"center", p.center.fraction_string()},
                      {"sign", p.sign},
                      {"kind", std::string(to_string(p.kind))},
                      {"coeffs", std::move(coeffs)}});
  }
  doc["pieces"] = std::move(pieces);
  return doc.dump(indent);
}

PiecewiseApprox from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("piecewise JSON: ") + e.what());
  }
  try {
    PiecewiseApprox f;
    f.func = parse_trig_function(doc.at("func").get<std::string>());
    f.r = doc.at("r").get<int>();
    for (const json& jp : doc.at("pieces")) {
      Piece p;
      p.lo = parse_rational(jp.at("lo").get<std::string>());
      p.hi = parse_rational(jp.at("hi").get<std::string>());
      p.center = parse_rational(jp.at("center").get<std::string>());
      p.sign = jp.at("sign").get<int>();
      if (p.sign != 1 && p.sign != -1) throw ParseError("piece sign must be +-1");
      const auto kind = jp.at("kind").get<std::string>();
      if (kind != "P" && kind != "Q") throw ParseError("piece kind must be P or Q");
      p.kind = kind == "P" ? Branch::kP : Branch::kQ;
      std::vector<Rational> coeffs;
      for (const json& c : jp.at("coeffs")) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      }
      p.poly = Polynomial(std::move(coeffs));
      f.pieces.push_back(std::move(p));
    }
    if (f.pieces.empty()) throw ParseError("piecewise JSON has no pieces");
    const Rational a = parse_rational(doc.at("a").get<std::string>());
    const Rational b = parse_rational(doc.at("b").get<std::string>());
    if (a != f.a() || b != f.b()) {
      throw ParseError("piecewise JSON: a/b disagree with the piece list");
    }
    for (std::size_t i = 0; i + 1 < f.pieces.size(); ++i) {
      if (f.pieces[i].hi != f.pieces[i + 1].lo) {
        throw ParseError("piecewise JSON: pieces do not tile [a, b]");
      }
    }
    f.m_global = interval_global_m(a, b, f.r);
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("piecewise JSON: ") + e.what());
  }
}

}  // namespace certrig
