#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "dayenu/families.hpp"
#include "dayenu/probability.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dayenu;

TEST_SUITE("probability") {

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).num() == -1);
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational().is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(7, 9), 0) == Rational(1));
  CHECK(Rational::pow(Rational(0), 5) == Rational(0));
  CHECK_THROWS_AS(Rational::pow(Rational(1, 2), -1), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("fraction and decimal rendering") {
  CHECK(Rational(2047, 2048).to_fraction_string() == "2047/2048");
  CHECK(Rational(1).to_fraction_string() == "1/1");
  CHECK(Rational(2047, 2048).to_decimal_string(7) == "0.9995117");
  CHECK(Rational(1, 2).to_decimal_string() == "0.5");
  CHECK(Rational(1).to_decimal_string() == "1");
  CHECK(Rational(0).to_decimal_string() == "0");
  CHECK(Rational(1, 3).to_decimal_string() == "0.3333333");
  CHECK(Rational(2, 3).to_decimal_string(3) == "0.667");
  CHECK(Rational(1, 32768).to_decimal_string() == "0.00003051758");
  CHECK(Rational(99999999, 100000000).to_decimal_string(7) == "1");
  CHECK(Rational(15, 2).to_decimal_string(3) == "7.5");
  CHECK(Rational(123456, 1).to_decimal_string(3) == "123000");
  CHECK(Rational(-1, 2).to_decimal_string() == "-0.5");
  CHECK_THROWS_AS(Rational(1, 2).to_decimal_string(0), std::invalid_argument);
}

TEST_CASE("uniform measure") {
  const ProductMeasure m = uniform_measure(15, Rational(1, 2));
  CHECK(m.arity() == 15);
  CHECK(m.prob(1) == Rational(1, 2));
  CHECK(m.prob(15) == Rational(1, 2));
  CHECK(uniform_measure(3, Rational(0)).prob(2) == Rational(0));
  CHECK(uniform_measure(3, Rational(1)).prob(3) == Rational(1));
  CHECK_THROWS_AS(uniform_measure(3, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(uniform_measure(3, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(uniform_measure(0, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(m.prob(16), std::invalid_argument);
}

TEST_CASE("assignment weights multiply per-variable probabilities") {
  CHECK(assignment_weight(uniform_measure(2, Rational(1, 2)),
                          Assignment::from_string("TF")) == Rational(1, 4));
  CHECK(assignment_weight(uniform_measure(15, Rational(1, 3)),
                          Assignment::from_string(std::string(15, 'T'))) ==
        Rational::pow(Rational(1, 3), 15));
  CHECK(assignment_weight(ProductMeasure({Rational(1, 3), Rational(1, 2)}),
                          Assignment::from_string("TT")) == Rational(1, 6));
  CHECK_THROWS_AS(assignment_weight(uniform_measure(2, Rational(1, 2)),
                                    Assignment::from_string("TTT")),
                  std::invalid_argument);
}

TEST_CASE("satisfaction probabilities of the named families") {
  using dayenu::dayenu;
  CHECK(sat_probability(dayenu(15), uniform_measure(15, Rational(1, 2))) ==
        Rational(2047, 2048));
  CHECK(sat_probability(god_function(3), uniform_measure(3, Rational(1, 2))) ==
        Rational(1, 8));
  std::mt19937_64 rng(30);
  CHECK(sat_probability(TruthTable::constant(4, true),
                        gen::random_measure(rng, 4)) == Rational(1));
  CHECK(sat_probability(TruthTable::constant(4, false),
                        gen::random_measure(rng, 4)) == Rational(0));
  CHECK_THROWS_AS(sat_probability(dayenu(3), uniform_measure(4, Rational(1, 2))),
                  std::invalid_argument);
}

TEST_CASE("sat_probability agrees with full-row enumeration") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const TruthTable t = gen::random_table(rng, n);
    const ProductMeasure m = gen::random_measure(rng, n);
    REQUIRE(sat_probability(t, m) == oracles::brute_sat_probability(t, m));
  }
}

TEST_CASE("uniform-1/2 probability is the truth count over 2^n") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const TruthTable t = gen::random_table(rng, n);
    REQUIRE(sat_probability(t, uniform_measure(n, Rational(1, 2))) ==
            Rational(BigInt(t.count_ones()), BigInt(1) << n));
  }
}

TEST_CASE("complement law is exact") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 250; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const TruthTable t = gen::random_table(rng, n);
    const ProductMeasure m = gen::random_measure(rng, n);
    REQUIRE(sat_probability(t, m) + sat_probability(~t, m) == Rational(1));
  }
}

TEST_CASE("closed form for the dayenu failure probability") {
  CHECK(dayenu_fail_closed_form(15, Rational(1, 2)) == Rational(1, 2048));
  CHECK(dayenu_fail_closed_form(15, Rational(1, 2)) == Rational(16, 32768));
  CHECK(dayenu_fail_closed_form(2, Rational(1, 2)) == Rational(3, 4));
  CHECK(dayenu_fail_closed_form(3, Rational(1, 3)) == Rational(5, 9));
  for (int n = 2; n <= 20; ++n) {
    REQUIRE(dayenu_fail_closed_form(n, Rational(1, 2)) ==
            Rational(n + 1, BigInt(1) << n));
    // all-skipped and all-performed are both staircases
    REQUIRE(dayenu_fail_closed_form(n, Rational(0)) == Rational(1));
    REQUIRE(dayenu_fail_closed_form(n, Rational(1)) == Rational(1));
  }
  CHECK_THROWS_AS(dayenu_fail_closed_form(1, Rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(dayenu_fail_closed_form(5, Rational(2)),
                  std::invalid_argument);
}

TEST_CASE("closed form equals the enumerated probability") {
  using dayenu::dayenu;
  const Rational ps[] = {Rational(0),      Rational(1, 4), Rational(1, 3),
                         Rational(1, 2),   Rational(2, 3), Rational(1)};
  for (int n = 2; n <= 20; ++n) {
    const TruthTable negated = ~dayenu(n);
    for (const Rational& p : ps) {
      REQUIRE(dayenu_fail_closed_form(n, p) ==
              sat_probability(negated, uniform_measure(n, p)));
    }
  }
}

TEST_CASE("monte carlo on constants is exact") {
  const ProductMeasure m = uniform_measure(3, Rational(1, 3));
  const MonteCarloEstimate hit =
      monte_carlo_sat(TruthTable::constant(3, true), m, 1000, 7);
  CHECK(hit.estimate == Rational(1));
  CHECK(hit.std_error == 0.0);
  CHECK(hit.hits == 1000);
  const MonteCarloEstimate miss =
      monte_carlo_sat(TruthTable::constant(3, false), m, 1000, 7);
  CHECK(miss.estimate == Rational(0));
  CHECK(miss.std_error == 0.0);
}

TEST_CASE("monte carlo is deterministic in the seed") {
  using dayenu::dayenu;
  const ProductMeasure m = uniform_measure(8, Rational(1, 3));
  const MonteCarloEstimate a = monte_carlo_sat(dayenu(8), m, 20000, 99);
  const MonteCarloEstimate b = monte_carlo_sat(dayenu(8), m, 20000, 99);
  CHECK(a.estimate == b.estimate);
  CHECK(a.hits == b.hits);
  CHECK(a.std_error == b.std_error);

  const MonteCarloEstimate c = monte_carlo_sat(dayenu(8), m, 20000, 100);
  CHECK(c.hits != a.hits);  // different stream; equality would be a 1-in-20000 fluke

  // close to the exact value: 6 standard errors is a generous gate
  const Rational exact = sat_probability(dayenu(8), m);
  CHECK(std::abs(a.estimate.to_double() - exact.to_double()) <=
        6.0 * a.std_error);
}

TEST_CASE("monte carlo respects degenerate probabilities") {
  const MonteCarloEstimate all =
      monte_carlo_sat(god_function(4), uniform_measure(4, Rational(1)), 500, 3);
  CHECK(all.estimate == Rational(1));
  const MonteCarloEstimate none =
      monte_carlo_sat(god_function(4), uniform_measure(4, Rational(0)), 500, 3);
  CHECK(none.estimate == Rational(0));
}

TEST_CASE("monte carlo rejects zero samples") {
  CHECK_THROWS_AS(monte_carlo_sat(TruthTable::constant(2, true),
                                  uniform_measure(2, Rational(1, 2)), 0, 1),
                  std::invalid_argument);
}

}  // TEST_SUITE
