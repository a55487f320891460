#include "liegiambelli/serialize.hpp"

#include <algorithm>
#include <charconv>

namespace liegiambelli {

std::string generator_key(Generator g) {
  return std::string(family_name(g.family)) + "_" + std::to_string(g.index);
}

Generator parse_generator_key(const std::string& key) {
  const auto underscore = key.find('_');
  if (underscore == std::string::npos) throw Error(ErrorCode::ParseError, "bad generator key '" + key + "'");
  const auto family = parse_family(std::string_view(key).substr(0, underscore));
  int index = 0;
  const char* first = key.data() + underscore + 1;
  const char* last = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (!family || ec != std::errc() || ptr != last || first == last || index < 1)
    throw Error(ErrorCode::ParseError, "bad generator key '" + key + "'");
  return {*family, index};
}

Json to_json(const GradedSeries& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json mono = Json::object();
    for (const Factor& f : m.factors()) mono[generator_key(f.generator)] = f.exponent;
    terms.push_back({{"monomial", mono}, {"coeff", to_string(c)}});
  }
  return {{"field", std::string(field_name(a.field()))}, {"order", a.order()}, {"terms", terms}};
}

GradedSeries series_from_json(const Json& j) {
  try {
    const std::string field_text = j.at("field").get<std::string>();
    Field field;
    if (field_text == "Q")
      field = Field::Q;
    else if (field_text == "F2")
      field = Field::F2;
    else
      throw Error(ErrorCode::ParseError, "unknown field '" + field_text + "'");
    const int order = j.at("order").get<int>();
    if (order < 0) throw Error(ErrorCode::ParseError, "negative order");
    GradedSeries out(field, order);
    for (const Json& term : j.at("terms")) {
      std::vector<Factor> factors;
      for (const auto& [key, exponent] : term.at("monomial").items())
        factors.push_back({parse_generator_key(key), exponent.get<int>()});
      const Json& coeff = term.at("coeff");
      const Rational c = coeff.is_string() ? parse_rational(coeff.get<std::string>())
                                           : Rational(coeff.get<long>());
      out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const FormalBundle& b) { return {{"rank", b.rank()}, {"class", to_json(b.total_class())}}; }

FormalBundle bundle_from_json(const Json& j) {
  try {
    return FormalBundle(j.at("rank").get<std::int64_t>(), series_from_json(j.at("class")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed bundle JSON: ") + e.what());
  }
}

namespace {

// Display order inside a monomial: family, then increasing index.
std::vector<Factor> display_factors(const Monomial& m) {
  std::vector<Factor> fs(m.factors().begin(), m.factors().end());
  std::stable_sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    if (a.generator.family != b.generator.family) return a.generator.family < b.generator.family;
    return a.generator.index < b.generator.index;
  });
  return fs;
}

std::string latex_generator(Generator g) {
  const std::string i = std::to_string(g.index);
  const std::string sub = g.index >= 10 ? "_{" + i + "}" : "_" + i;
  switch (g.family) {
    case Family::t: return "w" + sub + "(M)";
    case Family::v: return "w" + sub + "(V)";
    case Family::c: return "c" + sub;
    case Family::w: return "w" + sub;
  }
  return "?";
}

std::string latex_exponent(int e) {
  if (e == 1) return "";
  if (e >= 10) return "^{" + std::to_string(e) + "}";
  return "^" + std::to_string(e);
}

std::string latex_coefficient(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

}  // namespace

std::string to_latex(const GradedSeries& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const Rational magnitude = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (m.is_one() || magnitude != 1) out += latex_coefficient(magnitude);
    for (const Factor& f : display_factors(m)) out += latex_generator(f.generator) + latex_exponent(f.exponent);
  }
  return out;
}

std::string to_text(const GradedSeries& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const Rational magnitude = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::string body;
    if (m.is_one() || magnitude != 1) body = to_string(magnitude);
    for (const Factor& f : display_factors(m)) {
      if (!body.empty()) body += "*";
      body += generator_key(f.generator);
      if (f.exponent != 1) body += "^" + std::to_string(f.exponent);
    }
    out += body;
  }
  return out;
}

}  // namespace liegiambelli
