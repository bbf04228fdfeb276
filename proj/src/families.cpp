#include "dayenu/families.hpp"

#include <stdexcept>
#include <string>

namespace dayenu {

TruthTable god_function(int n) {
  TruthTable t = TruthTable::variable(n, 1);
  for (int i = 2; i <= n; ++i) {
    t = t & TruthTable::variable(n, i);
  }
  return t;
}

ExprPtr god_expr(int n) {
  if (n < 1) {
    throw std::invalid_argument("arity must be at least 1, got " +
                                std::to_string(n));
  }
  ExprPtr e = Expr::Var(1);
  for (int i = 2; i <= n; ++i) {
    e = Expr::And(std::move(e), Expr::Var(i));
  }
  return e;
}

namespace {

void check_dayenu_arity(int n, EmptyDayenu empty) {
  if (n < 2 && !(n == 1 && empty == EmptyDayenu::AsFalse)) {
    throw std::invalid_argument(
        "the dayenu disjunction is empty below arity 2, got " +
        std::to_string(n));
  }
}

}  // namespace

TruthTable dayenu(int n, EmptyDayenu empty) {
  check_dayenu_arity(n, empty);
  if (n == 1) {
    return TruthTable::constant(1, false);
  }
  TruthTable t = TruthTable::variable(n, 1) & ~TruthTable::variable(n, 2);
  for (int i = 2; i < n; ++i) {
    t = t | (TruthTable::variable(n, i) & ~TruthTable::variable(n, i + 1));
  }
  return t;
}

ExprPtr dayenu_expr(int n, EmptyDayenu empty) {
  check_dayenu_arity(n, empty);
  if (n == 1) {
    return Expr::False();
  }
  ExprPtr e = Expr::And(Expr::Var(1), Expr::Not(Expr::Var(2)));
  for (int i = 2; i < n; ++i) {
    e = Expr::Or(std::move(e),
                 Expr::And(Expr::Var(i), Expr::Not(Expr::Var(i + 1))));
  }
  return e;
}

Assignment StaircaseVector::to_assignment() const {
  if (n < 1) {
    throw std::invalid_argument("arity must be at least 1, got " +
                                std::to_string(n));
  }
  if (trailing_true < 0 || trailing_true > n) {
    throw std::invalid_argument("trailing-true count " +
                                std::to_string(trailing_true) +
                                " is outside [0, " + std::to_string(n) + "]");
  }
  std::vector<bool> values(static_cast<std::size_t>(n), false);
  for (int i = n - trailing_true; i < n; ++i) {
    values[static_cast<std::size_t>(i)] = true;
  }
  return Assignment(std::move(values));
}

Assignment staircase_assignment(int n, int k) {
  return StaircaseVector{n, k}.to_assignment();
}

std::vector<Assignment> staircase_set(int n) {
  if (n < 1) {
    throw std::invalid_argument("arity must be at least 1, got " +
                                std::to_string(n));
  }
  if (n > arity_cap()) {
    throw CapExceededError(n, arity_cap());
  }
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    out.push_back(staircase_assignment(n, k));
  }
  return out;
}

bool no_fall(const Assignment& a) {
  for (int i = 1; i < a.arity(); ++i) {
    if (a.value(i) && !a.value(i + 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace dayenu
