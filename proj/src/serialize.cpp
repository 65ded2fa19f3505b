#include "dpjet/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace dpjet {

using json = nlohmann::ordered_json;

namespace {

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

std::string cell(const Rational& c) {
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
}

json polynomial_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back(json::array({t.mono.exponents(), to_fraction_string(t.coeff)}));
  return out;
}

Polynomial polynomial_from(const json& j, int n) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) throw DomainError("polynomial term must be [exponents, coeff]");
    auto exps = entry[0].get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != n)
      throw ShapeMismatch("exponent vector of length " + std::to_string(exps.size()) + " in R_" + std::to_string(n));
    terms.push_back({Monomial(n, std::span<const int>(exps)), parse_fraction(entry[1].get<std::string>())});
  }
  return Polynomial(n, std::move(terms));
}

}  // namespace

std::string series_to_json(const BiSeries& s) {
  json terms = json::array();
  for (int j = 0; j <= s.tmax(); ++j)
    for (int i = 0; i <= s.qmax(); ++i)
      if (s.coeff(i, j) != 0) terms.push_back(json::array({i, j, to_fraction_string(s.coeff(i, j))}));
  json out = {{"qmax", s.qmax()}, {"tmax", s.tmax()}, {"terms", terms}};
  return out.dump();
}

BiSeries series_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  try {
    BiSeries s(j.at("qmax").get<int>(), j.at("tmax").get<int>());
    for (const auto& t : j.at("terms")) s.set(t.at(0).get<int>(), t.at(1).get<int>(), parse_fraction(t.at(2).get<std::string>()));
    return s;
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad series JSON: ") + e.what());
  }
}

std::string series_to_table(const BiSeries& s) {
  std::size_t width = 1;
  for (int j = 0; j <= s.tmax(); ++j)
    for (int i = 0; i <= s.qmax(); ++i) width = std::max(width, cell(s.coeff(i, j)).size());
  width = std::max(width, std::to_string(s.qmax()).size());
  std::size_t label = std::max<std::size_t>(3, std::to_string(s.tmax()).size());

  std::ostringstream os;
  os << std::setw(static_cast<int>(label)) << "t\\q";
  for (int i = 0; i <= s.qmax(); ++i) os << ' ' << std::setw(static_cast<int>(width)) << i;
  os << '\n';
  for (int j = 0; j <= s.tmax(); ++j) {
    os << std::setw(static_cast<int>(label)) << j;
    for (int i = 0; i <= s.qmax(); ++i) os << ' ' << std::setw(static_cast<int>(width)) << cell(s.coeff(i, j));
    os << '\n';
  }
  return os.str();
}

std::string series_to_csv(const BiSeries& s) {
  if (!s.has_integer_coefficients()) throw DomainError("CSV output requires integer coefficients");
  std::ostringstream os;
  os << "q_deg,t_deg,value\n";
  for (int j = 0; j <= s.tmax(); ++j)
    for (int i = 0; i <= s.qmax(); ++i) os << i << ',' << j << ',' << s.coeff(i, j).get_num().get_str() << '\n';
  return os.str();
}

std::string polynomial_to_json(const Polynomial& p) { return polynomial_json(p).dump(); }

Polynomial polynomial_from_json(const std::string& text, int n) {
  json j = parse_or_throw(text);
  try {
    return polynomial_from(j, n);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad polynomial JSON: ") + e.what());
  }
}

std::string basis_to_json(const GroebnerBasis& b) {
  json gens = json::array();
  for (const auto& g : b.gens) gens.push_back(polynomial_json(g));
  json out = {{"n", b.ambient_n}, {"reduced", b.reduced}, {"gens", gens}};
  return out.dump();
}

GroebnerBasis basis_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  try {
    GroebnerBasis b;
    b.ambient_n = j.at("n").get<int>();
    b.reduced = j.at("reduced").get<bool>();
    for (const auto& g : j.at("gens")) b.gens.push_back(polynomial_from(g, b.ambient_n));
    return b;
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad basis JSON: ") + e.what());
  }
}

}  // namespace dpjet
