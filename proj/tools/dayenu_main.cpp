#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dayenu/expr.hpp"
#include "dayenu/families.hpp"
#include "dayenu/normal_form.hpp"
#include "dayenu/probability.hpp"
#include "dayenu/serialize.hpp"
#include "dayenu/truth_table.hpp"

namespace {

using nlohmann::json;

// Exit codes are a stable contract: 0 success/pass, 1 verification failure,
// 2 usage or parse error, 3 arity cap exceeded.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct SourceOpts {
  std::string expr_text;
  std::string family;
  int n = 0;  // 0 means unset

  void attach(CLI::App* cmd) {
    auto* e = cmd->add_option("-e,--expr", expr_text,
                              "Formula text, e.g. \"x1 & ~x2\"");
    auto* f = cmd->add_option("--family", family, "Function family")
                  ->check(CLI::IsMember({"god", "dayenu"}));
    cmd->add_option("-n", n, "Arity (number of variables)");
    e->excludes(f);
    f->excludes(e);
  }

  // Resolved table plus the arity it was built at.
  dayenu::TruthTable table() const {
    if (!family.empty()) {
      if (n < 1) {
        throw std::invalid_argument("--family requires -n");
      }
      return family == "god" ? dayenu::god_function(n) : dayenu::dayenu(n);
    }
    if (expr_text.empty()) {
      throw std::invalid_argument("pass a formula with -e or a --family");
    }
    const dayenu::ExprPtr e = dayenu::parse_formula(expr_text);
    // arity defaults to the largest variable; constant formulas get arity 1
    const int arity = n > 0 ? n : std::max(e->max_var(), 1);
    return dayenu::compile(e, arity);
  }
};

struct MeasureOpts {
  std::string uniform_p = "1/2";
  std::string prob_list;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("-p", uniform_p,
                              "Uniform per-variable probability (rational)");
    auto* list = cmd->add_option(
        "--probs", prob_list,
        "Comma-separated per-variable probabilities, x1 first");
    p->excludes(list);
    list->excludes(p);
  }

  dayenu::ProductMeasure measure(int n) const {
    if (prob_list.empty()) {
      return dayenu::uniform_measure(n, dayenu::Rational::parse(uniform_p));
    }
    std::vector<dayenu::Rational> probs;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = prob_list.find(',', start);
      probs.push_back(dayenu::Rational::parse(
          prob_list.substr(start, comma - start)));
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    if (probs.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("--probs needs exactly " +
                                  std::to_string(n) + " entries, got " +
                                  std::to_string(probs.size()));
    }
    return dayenu::ProductMeasure(std::move(probs));
  }
};

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

std::string format_probability(const dayenu::Rational& r) {
  return r.to_fraction_string() + " ≈ " + r.to_decimal_string();
}

int run_eval(const SourceOpts& source, const std::string& assign,
             bool structured) {
  const dayenu::TruthTable t = source.table();
  const dayenu::Assignment a = dayenu::Assignment::from_string(assign);
  const bool value = t.eval(a);
  if (structured) {
    emit({{"command", "eval"},
          {"n", t.arity()},
          {"assignment", a.to_string()},
          {"value", value}});
  } else {
    std::cout << (value ? "T" : "F") << "\n";
  }
  return kExitOk;
}

int run_dnf(const SourceOpts& source, bool negate, bool structured) {
  dayenu::TruthTable t = source.table();
  if (negate) {
    t = ~t;
  }
  const dayenu::Dnf d = dayenu::full_dnf(t);
  if (structured) {
    json minterms = json::array();
    for (const dayenu::Minterm& m : d.minterms()) {
      minterms.push_back(m.to_string());
    }
    emit({{"command", "dnf"},
          {"n", t.arity()},
          {"negated", negate},
          {"count", d.size()},
          {"minterms", minterms}});
  } else {
    for (const dayenu::Minterm& m : d.minterms()) {
      std::cout << m.to_string() << "\n";
    }
    std::cout << "count: " << d.size() << "\n";
  }
  return kExitOk;
}

int run_truthset(const SourceOpts& source, bool negate, bool structured) {
  dayenu::TruthTable t = source.table();
  if (negate) {
    t = ~t;
  }
  const std::vector<dayenu::Assignment> set = t.truth_set();
  if (structured) {
    json rows = json::array();
    for (const dayenu::Assignment& a : set) {
      rows.push_back(a.to_string());
    }
    emit({{"command", "truthset"},
          {"n", t.arity()},
          {"negated", negate},
          {"count", set.size()},
          {"assignments", rows}});
  } else {
    for (const dayenu::Assignment& a : set) {
      std::cout << a.to_string() << "\n";
    }
    std::cout << "count: " << set.size() << "\n";
  }
  return kExitOk;
}

int run_prob(const SourceOpts& source, const MeasureOpts& measure,
             bool structured) {
  const dayenu::TruthTable t = source.table();
  const dayenu::ProductMeasure m = measure.measure(t.arity());
  const dayenu::Rational p = dayenu::sat_probability(t, m);
  if (structured) {
    json probs = json::array();
    for (const dayenu::Rational& q : m.probs()) {
      probs.push_back(q.to_fraction_string());
    }
    emit({{"command", "prob"},
          {"n", t.arity()},
          {"measure", probs},
          {"probability", p}});
  } else {
    std::cout << format_probability(p) << "\n";
  }
  return kExitOk;
}

int run_mc(const SourceOpts& source, const MeasureOpts& measure,
           std::uint64_t samples, std::uint64_t seed, bool structured) {
  const dayenu::TruthTable t = source.table();
  const dayenu::ProductMeasure m = measure.measure(t.arity());
  const dayenu::MonteCarloEstimate est =
      dayenu::monte_carlo_sat(t, m, samples, seed);
  char se[32];
  std::snprintf(se, sizeof(se), "%.6g", est.std_error);
  if (structured) {
    json doc = est;
    doc["command"] = "mc";
    doc["n"] = t.arity();
    emit(doc);
  } else {
    std::cout << "estimate: " << format_probability(est.estimate) << "\n"
              << "std_error: " << se << "\n"
              << "samples: " << est.samples << "\n"
              << "seed: " << est.seed << "\n";
  }
  return kExitOk;
}

int run_verify(int from, int to, bool structured) {
  if (from < 2 || to < from) {
    throw std::invalid_argument(
        "verification range must satisfy 2 <= from <= to");
  }
  bool all_pass = true;
  std::optional<std::string> first_counterexample;
  json reports = json::array();

  for (int n = from; n <= to; ++n) {
    const dayenu::TheoremReport theorem = dayenu::verify_dayenu_theorem(n);
    std::optional<dayenu::InductionReport> induction;
    if (n >= 3) {
      induction = dayenu::verify_induction_step(n);
    }
    const dayenu::Rational closed =
        dayenu::dayenu_fail_closed_form(n, dayenu::Rational(1, 2));
    const dayenu::Rational enumerated = dayenu::sat_probability(
        ~dayenu::dayenu(n), dayenu::uniform_measure(n, dayenu::Rational(1, 2)));
    const bool closed_form_match =
        closed == enumerated &&
        closed == dayenu::Rational(n + 1, dayenu::BigInt(1) << n);

    const bool pass =
        theorem.pass && (!induction || induction->pass) && closed_form_match;
    all_pass = all_pass && pass;
    if (!pass && !first_counterexample) {
      if (theorem.counterexample) {
        first_counterexample = theorem.counterexample->to_string();
      } else if (induction && induction->counterexample) {
        first_counterexample = induction->counterexample->to_string();
      }
    }

    if (structured) {
      json entry = {{"n", n},
                    {"theorem", theorem},
                    {"closed_form_match", closed_form_match},
                    {"pass", pass}};
      if (induction) {
        entry["induction"] = *induction;
      }
      reports.push_back(std::move(entry));
    } else {
      std::cout << "n=" << n << ": minterms=" << theorem.minterm_count << "/"
                << theorem.expected_count
                << " staircase=" << (theorem.staircase_match ? "ok" : "FAIL")
                << " demorgan=" << (theorem.demorgan_match ? "ok" : "FAIL")
                << " induction="
                << (induction ? (induction->pass ? "ok" : "FAIL") : "n/a")
                << " closed_form=" << (closed_form_match ? "ok" : "FAIL")
                << " -> " << (pass ? "PASS" : "FAIL") << "\n";
    }
  }

  if (structured) {
    json doc = {{"command", "verify"},
                {"theorem", "dayenu"},
                {"from", from},
                {"to", to},
                {"pass", all_pass},
                {"reports", std::move(reports)}};
    if (first_counterexample) {
      doc["counterexample"] = *first_counterexample;
    }
    emit(doc);
  } else if (!all_pass) {
    std::cout << "FAIL";
    if (first_counterexample) {
      std::cout << " (first counterexample: " << *first_counterexample << ")";
    }
    std::cout << "\n";
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive truth-table analysis of the Dayenu Boolean "
               "function: evaluation, full DNF, exact satisfaction "
               "probabilities, and theorem verification"};
  app.require_subcommand(1);
  app.fallthrough();

  int max_n = dayenu::kDefaultArityCap;
  app.add_option("--max-n", max_n, "Arity cap for exhaustive tables")
      ->envname("DAYENU_MAX_N");
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "structured"}));

  SourceOpts eval_source;
  std::string eval_assign;
  auto* eval_cmd =
      app.add_subcommand("eval", "Evaluate at one assignment, printing T/F");
  eval_source.attach(eval_cmd);
  eval_cmd->add_option("--assign", eval_assign,
                       "Assignment as a T/F string, x1 leftmost")
      ->required();

  SourceOpts dnf_source;
  bool dnf_negate = false;
  auto* dnf_cmd =
      app.add_subcommand("dnf", "List the full-DNF minterms, one per line");
  dnf_source.attach(dnf_cmd);
  dnf_cmd->add_flag("--negate", dnf_negate, "Use the negated function");

  SourceOpts truthset_source;
  bool truthset_negate = false;
  auto* truthset_cmd = app.add_subcommand(
      "truthset", "List the satisfying assignments as T/F strings");
  truthset_source.attach(truthset_cmd);
  truthset_cmd->add_flag("--negate", truthset_negate,
                         "Use the negated function");

  SourceOpts prob_source;
  MeasureOpts prob_measure;
  auto* prob_cmd = app.add_subcommand(
      "prob", "Exact satisfaction probability under a product measure");
  prob_source.attach(prob_cmd);
  prob_measure.attach(prob_cmd);

  int verify_from = 0;
  int verify_to = 0;
  std::string verify_theorem;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check the Dayenu theorem, induction step, and closed form");
  verify_cmd->add_option("--theorem", verify_theorem, "Theorem to check")
      ->check(CLI::IsMember({"dayenu"}))
      ->required();
  verify_cmd->add_option("--from", verify_from, "First arity")->required();
  verify_cmd->add_option("--to", verify_to, "Last arity")->required();

  SourceOpts mc_source;
  MeasureOpts mc_measure;
  std::uint64_t mc_samples = 0;
  std::uint64_t mc_seed = 0;
  auto* mc_cmd = app.add_subcommand(
      "mc", "Seeded Monte Carlo estimate of the satisfaction probability");
  mc_source.attach(mc_cmd);
  mc_measure.attach(mc_cmd);
  mc_cmd->add_option("--samples", mc_samples, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc_seed, "Generator seed (required: runs are "
                                        "reproducible, never wall-clock seeded)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    dayenu::set_arity_cap(max_n);
    const bool structured = format == "structured";
    if (eval_cmd->parsed()) {
      return run_eval(eval_source, eval_assign, structured);
    }
    if (dnf_cmd->parsed()) {
      return run_dnf(dnf_source, dnf_negate, structured);
    }
    if (truthset_cmd->parsed()) {
      return run_truthset(truthset_source, truthset_negate, structured);
    }
    if (prob_cmd->parsed()) {
      return run_prob(prob_source, prob_measure, structured);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_from, verify_to, structured);
    }
    if (mc_cmd->parsed()) {
      return run_mc(mc_source, mc_measure, mc_samples, mc_seed, structured);
    }
  } catch (const dayenu::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
