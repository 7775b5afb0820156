#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "bargkit/classify.hpp"
#include "bargkit/function_spec.hpp"
#include "bargkit/hermite.hpp"
#include "bargkit/weights.hpp"

namespace bargkit {

nlohmann::json to_json(const HermiteExpansion& e);
HermiteExpansion expansion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FunctionSpec& spec);
FunctionSpec function_spec_from_json(const nlohmann::json& j);

// Weight specs round-trip through a "type" tag; radial weights are exposed as
// the named profiles radial_exponential (h) and radial_linear_exponential (R).
nlohmann::json to_json(const WeightSpec& w);
WeightSpec weight_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const DecayFit& fit);
std::string membership_name(Membership m);

// Input files hold either a coefficient table ("coeffs" present) or a
// function spec ("type" present).
using ParsedInput = std::variant<HermiteExpansion, FunctionSpec>;
ParsedInput parse_input_json(const nlohmann::json& j);

// Coefficient table as CSV: alpha_1..alpha_d, re, im in graded
// lexicographic order, 17 significant digits, LF line endings.
std::string expansion_to_csv(const HermiteExpansion& e);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bargkit
