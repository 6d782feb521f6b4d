#include "tribospin/serialization.hpp"

#include <cstdio>

namespace tribospin {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

nlohmann::json to_json(const Rational& x) { return x.str(); }

nlohmann::json to_json(const HyperbolicNumber& x) {
  return {{"re", x.re.str()}, {"j", x.jpart.str()}};
}

nlohmann::json to_json(const SplitQuaternion& q) {
  return {{"q0", q.q0.str()}, {"q1", q.q1.str()}, {"q2", q.q2.str()}, {"q3", q.q3.str()}};
}

nlohmann::json to_json(const HSpinor& x) {
  return {{"c1", to_json(x.c1)}, {"c2", to_json(x.c2)}};
}

nlohmann::json to_json(const std::complex<double>& z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json to_json(const ComplexHyperbolic& x) {
  return {{"re", to_json(x.re)}, {"j", to_json(x.jpart)}};
}

nlohmann::json to_json(const CHSpinor& x) {
  return {{"c1", to_json(x.c1)}, {"c2", to_json(x.c2)}};
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

nlohmann::json to_json(const PolyHSpinor& x) {
  return {{"c1", {{"re", to_json(x.c1re)}, {"j", to_json(x.c1j)}}},
          {"c2", {{"re", to_json(x.c2re)}, {"j", to_json(x.c2j)}}}};
}

nlohmann::json to_json(const IdentityCheck& c) {
  return {{"theorem", c.theorem},       {"identity_index", c.identity_index},
          {"family", c.family},         {"n_max", c.n_max},
          {"status", to_string(c.status)}, {"detail", c.detail}};
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"checks", std::move(checks)},
          {"matches_manifest", r.matches_manifest},
          {"any_discrepant", r.any_discrepant},
          {"regressions", r.regressions}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational as a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

HyperbolicNumber hyperbolic_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("j"))
    throw ParseError("expected {\"re\":..,\"j\":..}");
  return {rational_from_json(j.at("re")), rational_from_json(j.at("j"))};
}

HSpinor spinor_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("c1") || !j.contains("c2"))
    throw ParseError("expected {\"c1\":..,\"c2\":..}");
  return {hyperbolic_from_json(j.at("c1")), hyperbolic_from_json(j.at("c2"))};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array, lowest degree first");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

}  // namespace tribospin
