#include "dayenu/serialize.hpp"

namespace dayenu {

void to_json(nlohmann::json& j, const TruthTable& t) {
  j = nlohmann::json{{"n", t.arity()}, {"bits", t.to_bit_string()}};
}

TruthTable table_from_json(const nlohmann::json& j) {
  return TruthTable::from_bits(j.at("n").get<int>(),
                               j.at("bits").get<std::string>());
}

void to_json(nlohmann::json& j, const Rational& r) {
  j = nlohmann::json{{"num", r.num().str()},
                     {"den", r.den().str()},
                     {"decimal", r.to_decimal_string()}};
}

void to_json(nlohmann::json& j, const TheoremReport& report) {
  j = nlohmann::json{{"n", report.n},
                     {"minterm_count", report.minterm_count},
                     {"expected_count", report.expected_count},
                     {"staircase_match", report.staircase_match},
                     {"demorgan_match", report.demorgan_match},
                     {"pass", report.pass}};
  if (report.counterexample) {
    j["counterexample"] = report.counterexample->to_string();
  }
}

void to_json(nlohmann::json& j, const InductionReport& report) {
  j = nlohmann::json{{"n", report.n},
                     {"factored_match", report.factored_match},
                     {"distributed_match", report.distributed_match},
                     {"pass", report.pass}};
  if (report.counterexample) {
    j["counterexample"] = report.counterexample->to_string();
  }
}

void to_json(nlohmann::json& j, const MonteCarloEstimate& estimate) {
  j = nlohmann::json{{"estimate", estimate.estimate},
                     {"std_error", estimate.std_error},
                     {"hits", estimate.hits},
                     {"samples", estimate.samples},
                     {"seed", estimate.seed}};
}

}  // namespace dayenu
