#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bellrand/certify.hpp"
#include "bellrand/mermin.hpp"
#include "bellrand/randomness.hpp"

namespace bellrand {

/// Behavior file: {"n": int, "entries": [{"x": bits, "a": bits, "p": "num/den"}]};
/// omitted entries are zero, bitstrings little-endian per the party encoding.
nlohmann::json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const nlohmann::json& j);

/// Decomposition file: {"n": int, "components": [{"label": str,
///   "weights": {bits: "num/den", ...}, "behavior": <behavior object>}]}.
nlohmann::json decomposition_to_json(const Decomposition& d, int n);
Decomposition decomposition_from_json(const nlohmann::json& j);

/// Certificate export: {"n","input","status","value","mode","witness_file"}.
nlohmann::json certificate_to_json(const Certificate& cert, int n, Mask input,
                                   const std::string& witness_file);

nlohmann::json expansion_to_json(const MerminExpansion& e);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

/// Decimal with 12 significant digits (CSV plot column).
std::string to_decimal_string(const Rational& r);

}  // namespace bellrand
