// Acceptance suite: one check per headline claim, one PASS/FAIL line each.
// Every comparison is exact unless the line says otherwise; the binary exits
// nonzero if any check fails.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "dayenu/expr.hpp"
#include "dayenu/families.hpp"
#include "dayenu/normal_form.hpp"
#include "dayenu/probability.hpp"
#include "dayenu/truth_table.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace dayenu;

namespace {

using dayenu::dayenu;  // the family constructor, shadowing the namespace name

struct Failure {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) {
    throw Failure{detail};
  }
}

// --- criteria ---------------------------------------------------------------

std::string corollary_probability() {
  const Rational p =
      sat_probability(dayenu(15), uniform_measure(15, Rational(1, 2)));
  require(p == Rational(2047, 2048),
          "expected 2047/2048, got " + p.to_fraction_string());
  require(p.to_decimal_string(7) == "0.9995117",
          "7-digit rendering was " + p.to_decimal_string(7));
  return p.to_fraction_string() + " = " + p.to_decimal_string(7);
}

std::string theorem_full_dnf() {
  for (int n = 2; n <= 16; ++n) {
    const Dnf d = full_dnf(~dayenu(n));
    require(d.size() == static_cast<std::size_t>(n) + 1,
            "n=" + std::to_string(n) + ": " + std::to_string(d.size()) +
                " minterms");
    const std::vector<Assignment> stairs = staircase_set(n);
    for (std::size_t i = 0; i < stairs.size(); ++i) {
      require(d.minterms()[i].to_assignment() == stairs[i],
              "n=" + std::to_string(n) + ": minterm " + std::to_string(i) +
                  " is " + d.minterms()[i].to_assignment().to_string() +
                  ", want " + stairs[i].to_string());
    }
  }
  return "full DNF of ~D_n = the n+1 staircase minterms, n in [2,16]";
}

std::string failure_count_law() {
  for (int n = 2; n <= 20; ++n) {
    const std::size_t count = (~dayenu(n)).truth_set().size();
    require(count == static_cast<std::size_t>(n) + 1,
            "n=" + std::to_string(n) + ": " + std::to_string(count) +
                " failing rows");
  }
  return "|truth_set(~D_n)| = n+1, n in [2,20]";
}

std::string all_miracles_unsatisfying() {
  for (int n = 2; n <= 20; ++n) {
    const Assignment all_true = staircase_assignment(n, n);
    require(!dayenu(n).eval(all_true),
            "n=" + std::to_string(n) + ": D_n(T^n) is true");
    require(god_function(n).eval(all_true),
            "n=" + std::to_string(n) + ": G_n(T^n) is false");
    require((god_function(n) & dayenu(n)) == TruthTable::constant(n, false),
            "n=" + std::to_string(n) + ": G_n & D_n is not constant false");
  }
  return "D_n(T^n) = F and G_n & D_n = F, n in [2,20]";
}

std::string staircase_three_way_equivalence() {
  for (int n = 2; n <= 16; ++n) {
    std::vector<Assignment> no_fall_set;
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << n); ++index) {
      const Assignment a = assignment_from_index(n, index);
      if (no_fall(a)) {
        no_fall_set.push_back(a);
      }
    }
    const std::vector<Assignment> stairs = staircase_set(n);
    const std::vector<Assignment> truth = (~dayenu(n)).truth_set();
    require(no_fall_set == stairs,
            "n=" + std::to_string(n) + ": no_fall set != staircase set");
    require(stairs == truth,
            "n=" + std::to_string(n) + ": staircase set != truth_set(~D_n)");
  }
  return "no_fall = staircase_set = truth_set(~D_n), n in [2,16]";
}

std::string induction_step_identity() {
  for (int n = 3; n <= 16; ++n) {
    const InductionReport r = verify_induction_step(n);
    require(r.pass, "n=" + std::to_string(n) + ": " +
                        (r.counterexample ? r.counterexample->to_string()
                                          : "mismatch"));
  }
  return "~D_n = ~D_{n-1} & (~x_{n-1} | x_n), n in [3,16]";
}

std::string god_probability_law() {
  const Rational ps[] = {Rational(0), Rational(1, 4), Rational(1, 2),
                         Rational(3, 4), Rational(1)};
  for (int n = 1; n <= 16; ++n) {
    for (const Rational& p : ps) {
      const Rational got = sat_probability(god_function(n), uniform_measure(n, p));
      require(got == Rational::pow(p, n),
              "n=" + std::to_string(n) + ", p=" + p.to_fraction_string() +
                  ": got " + got.to_fraction_string());
    }
  }
  return "P[G_n] = p^n, n in [1,16], p in {0,1/4,1/2,3/4,1}";
}

std::string closed_form_vs_enumeration() {
  const Rational ps[] = {Rational(0),    Rational(1, 4), Rational(1, 3),
                         Rational(1, 2), Rational(2, 3), Rational(1)};
  for (int n = 2; n <= 18; ++n) {
    for (const Rational& p : ps) {
      const Rational closed = dayenu_fail_closed_form(n, p);
      const Rational enumerated =
          sat_probability(~dayenu(n), uniform_measure(n, p));
      require(closed == enumerated,
              "n=" + std::to_string(n) + ", p=" + p.to_fraction_string() +
                  ": " + closed.to_fraction_string() + " vs " +
                  enumerated.to_fraction_string());
    }
  }
  return "staircase sum = enumerated P[~D_n], n in [2,18], six p values";
}

std::string property_suites() {
  // DNF round trip: all 16 two-variable functions, then random tables
  for (int bits = 0; bits < 16; ++bits) {
    std::string s(4, '0');
    for (int j = 0; j < 4; ++j) {
      if ((bits >> j) & 1) {
        s[static_cast<std::size_t>(j)] = '1';
      }
    }
    const TruthTable t = TruthTable::from_bits(2, s);
    require(compile(dnf_to_expr(full_dnf(t)), 2) == t,
            "2-var DNF round trip failed on bits " + s);
  }
  std::mt19937_64 rng(20250414);
  for (int round = 0; round < 1000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const TruthTable t = gen::random_table(rng, n);
    require(compile(dnf_to_expr(full_dnf(t)), n) == t,
            "DNF round trip failed at round " + std::to_string(round));
  }

  // parser round trip
  for (int round = 0; round < 1000; ++round) {
    const ExprPtr e = gen::random_expr(rng, 6, 5);
    require(structurally_equal(*parse_formula(print_formula(e)), *e),
            "parser round trip failed on " + print_formula(e));
  }

  // De Morgan duality on expression pairs
  for (int round = 0; round < 1000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const ExprPtr a = gen::random_expr(rng, n, 4);
    const ExprPtr b = gen::random_expr(rng, n, 4);
    require(compile(Expr::Not(Expr::And(a, b)), n) ==
                compile(Expr::Or(Expr::Not(a), Expr::Not(b)), n),
            "De Morgan (and) failed at round " + std::to_string(round));
    require(compile(Expr::Not(Expr::Or(a, b)), n) ==
                compile(Expr::And(Expr::Not(a), Expr::Not(b)), n),
            "De Morgan (or) failed at round " + std::to_string(round));
  }

  // complement law over random (table, measure) pairs
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const TruthTable t = gen::random_table(rng, n);
    const ProductMeasure m = gen::random_measure(rng, n);
    require(sat_probability(t, m) + sat_probability(~t, m) == Rational(1),
            "complement law failed at round " + std::to_string(round));
  }
  return "DNF/parse round trips, De Morgan pairs, complement law";
}

std::string monte_carlo_sanity() {
  const TruthTable t = dayenu(15);
  const ProductMeasure m = uniform_measure(15, Rational(1, 2));
  const std::uint64_t samples = 1000000;
  const std::uint64_t seed = 42;

  const MonteCarloEstimate est = monte_carlo_sat(t, m, samples, seed);
  const double exact = Rational(2047, 2048).to_double();
  const double deviation = std::fabs(est.estimate.to_double() - exact);
  require(deviation <= 4.0 * est.std_error,
          "estimate " + est.estimate.to_fraction_string() + " deviates " +
              std::to_string(deviation) + " > 4 * " +
              std::to_string(est.std_error));

  const MonteCarloEstimate rerun = monte_carlo_sat(t, m, samples, seed);
  require(rerun.estimate == est.estimate && rerun.hits == est.hits &&
              rerun.std_error == est.std_error,
          "rerun with the same seed differed");
  return est.estimate.to_fraction_string() + " within 4 SE of 2047/2048, "
         "rerun identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>>
      criteria = {
          {"corollary-probability", corollary_probability},
          {"theorem-full-dnf", theorem_full_dnf},
          {"failure-count-law", failure_count_law},
          {"all-miracles-unsatisfying", all_miracles_unsatisfying},
          {"staircase-equivalence", staircase_three_way_equivalence},
          {"induction-step", induction_step_identity},
          {"god-probability-law", god_probability_law},
          {"closed-form-vs-enumeration", closed_form_vs_enumeration},
          {"property-suites", property_suites},
          {"monte-carlo-sanity", monte_carlo_sanity},
      };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    std::string detail;
    bool ok = true;
    try {
      detail = run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    failures += ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
