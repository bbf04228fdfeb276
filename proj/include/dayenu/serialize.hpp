#pragma once

#include <json.hpp>

#include "dayenu/normal_form.hpp"
#include "dayenu/probability.hpp"
#include "dayenu/truth_table.hpp"

namespace dayenu {

// Structured table form: {"n": 2, "bits": "0010"}, index 0 first.
void to_json(nlohmann::json& j, const TruthTable& t);
TruthTable table_from_json(const nlohmann::json& j);

// Numerator and denominator as decimal strings (they outgrow 64 bits),
// plus the default 7-significant-digit decimal.
void to_json(nlohmann::json& j, const Rational& r);

// The "counterexample" field is present only when there is one.
void to_json(nlohmann::json& j, const TheoremReport& report);
void to_json(nlohmann::json& j, const InductionReport& report);

void to_json(nlohmann::json& j, const MonteCarloEstimate& estimate);

}  // namespace dayenu
