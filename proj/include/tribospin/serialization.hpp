#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tribospin/hyperbolic.hpp"
#include "tribospin/poly_spinor.hpp"
#include "tribospin/spinor.hpp"
#include "tribospin/split_quaternion.hpp"
#include "tribospin/verification.hpp"

namespace tribospin {

// Documented JSON forms:
//   rational            "p/q" (or "p")
//   hyperbolic number   {"re":"p/q","j":"p/q"}
//   split quaternion    {"q0":"p/q","q1":"p/q","q2":"p/q","q3":"p/q"}
//   spinor              {"c1":{"re":..,"j":..},"c2":{..}}
//   complex             {"re":1.0,"im":0.0}
//   polynomial          ["p/q", ...] lowest degree first

nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const HyperbolicNumber& x);
nlohmann::json to_json(const SplitQuaternion& q);
nlohmann::json to_json(const HSpinor& x);
nlohmann::json to_json(const std::complex<double>& z);
nlohmann::json to_json(const ComplexHyperbolic& x);
nlohmann::json to_json(const CHSpinor& x);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const PolyHSpinor& x);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json report_to_json(const VerificationReport& r);

Rational rational_from_json(const nlohmann::json& j);
HyperbolicNumber hyperbolic_from_json(const nlohmann::json& j);
HSpinor spinor_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// 12-significant-digit float rendering used everywhere floats are printed.
std::string format_double(double v);

}  // namespace tribospin
