#pragma once

// Seeded random inputs for the property tests. Everything is driven by an
// explicit mt19937_64 so failures replay exactly.

#include <random>
#include <string>
#include <vector>

#include "dayenu/expr.hpp"
#include "dayenu/probability.hpp"
#include "dayenu/truth_table.hpp"

namespace gen {

inline dayenu::TruthTable random_table(std::mt19937_64& rng, int n) {
  std::string bits(std::size_t{1} << n, '0');
  for (char& c : bits) {
    c = (rng() & 1) ? '1' : '0';
  }
  return dayenu::TruthTable::from_bits(n, bits);
}

inline dayenu::Assignment random_assignment(std::mt19937_64& rng, int n) {
  std::vector<bool> values(static_cast<std::size_t>(n));
  for (auto&& v : values) {
    v = rng() & 1;
  }
  return dayenu::Assignment(std::move(values));
}

inline dayenu::ExprPtr random_expr(std::mt19937_64& rng, int max_var,
                                   int depth, bool allow_xor = true) {
  using dayenu::Expr;
  if (depth == 0 || rng() % 4 == 0) {
    switch (rng() % 8) {
      case 0: return Expr::True();
      case 1: return Expr::False();
      default: return Expr::Var(1 + static_cast<int>(rng() % max_var));
    }
  }
  switch (rng() % (allow_xor ? 4 : 3)) {
    case 0: return Expr::Not(random_expr(rng, max_var, depth - 1, allow_xor));
    case 1:
      return Expr::And(random_expr(rng, max_var, depth - 1, allow_xor),
                       random_expr(rng, max_var, depth - 1, allow_xor));
    case 2:
      return Expr::Or(random_expr(rng, max_var, depth - 1, allow_xor),
                      random_expr(rng, max_var, depth - 1, allow_xor));
    default:
      return Expr::Xor(random_expr(rng, max_var, depth - 1, allow_xor),
                       random_expr(rng, max_var, depth - 1, allow_xor));
  }
}

inline dayenu::Rational random_prob(std::mt19937_64& rng) {
  const long long den = 1 + static_cast<long long>(rng() % 12);
  const long long num = static_cast<long long>(rng() % (den + 1));
  return dayenu::Rational(num, den);
}

inline dayenu::ProductMeasure random_measure(std::mt19937_64& rng, int n) {
  std::vector<dayenu::Rational> probs;
  probs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    probs.push_back(random_prob(rng));
  }
  return dayenu::ProductMeasure(std::move(probs));
}

}  // namespace gen
