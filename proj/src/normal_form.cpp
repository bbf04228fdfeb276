#include "dayenu/normal_form.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "dayenu/families.hpp"

namespace dayenu {

Minterm::Minterm(const Assignment& a) : plain_(a.values()) {}

Minterm::Minterm(int n, std::vector<bool> plain) : plain_(std::move(plain)) {
  if (n < 1 || plain_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("a full minterm needs exactly one polarity "
                                "per variable");
  }
}

bool Minterm::plain(int var) const {
  if (var < 1 || var > arity()) {
    throw std::invalid_argument("variable x" + std::to_string(var) +
                                " is outside arity " + std::to_string(arity()));
  }
  return plain_[static_cast<std::size_t>(var) - 1];
}

Assignment Minterm::to_assignment() const { return Assignment(plain_); }

std::uint64_t Minterm::index() const {
  return assignment_index(to_assignment());
}

ExprPtr Minterm::to_expr() const {
  ExprPtr e;
  for (int i = 1; i <= arity(); ++i) {
    ExprPtr literal =
        plain(i) ? Expr::Var(i) : Expr::Not(Expr::Var(i));
    e = e ? Expr::And(std::move(e), std::move(literal)) : std::move(literal);
  }
  return e;
}

std::string Minterm::to_string() const { return print_formula(to_expr()); }

Dnf::Dnf(int n, std::vector<Minterm> minterms)
    : n_(n), minterms_(std::move(minterms)) {
  if (n_ < 1) {
    throw std::invalid_argument("arity must be at least 1, got " +
                                std::to_string(n_));
  }
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i < minterms_.size(); ++i) {
    if (minterms_[i].arity() != n_) {
      throw std::invalid_argument("minterm arity mismatch");
    }
    const std::uint64_t index = minterms_[i].index();
    if (i > 0 && index <= previous) {
      throw std::invalid_argument(
          "minterms must be strictly ascending by assignment index");
    }
    previous = index;
  }
}

Dnf full_dnf(const TruthTable& t) {
  std::vector<Minterm> minterms;
  minterms.reserve(static_cast<std::size_t>(t.count_ones()));
  t.for_each_one([&](std::uint64_t index) {
    minterms.emplace_back(assignment_from_index(t.arity(), index));
  });
  return Dnf(t.arity(), std::move(minterms));
}

ExprPtr dnf_to_expr(const Dnf& d) {
  ExprPtr e;
  for (const Minterm& m : d.minterms()) {
    ExprPtr term = m.to_expr();
    e = e ? Expr::Or(std::move(e), std::move(term)) : std::move(term);
  }
  return e ? e : Expr::False();
}

namespace {

ExprPtr expand_xor(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::ConstFalse:
    case ExprKind::ConstTrue:
    case ExprKind::Var:
      return e;
    case ExprKind::Not:
      return Expr::Not(expand_xor(e->child()));
    case ExprKind::And:
      return Expr::And(expand_xor(e->lhs()), expand_xor(e->rhs()));
    case ExprKind::Or:
      return Expr::Or(expand_xor(e->lhs()), expand_xor(e->rhs()));
    case ExprKind::Xor: {
      ExprPtr a = expand_xor(e->lhs());
      ExprPtr b = expand_xor(e->rhs());
      return Expr::Or(Expr::And(a, Expr::Not(b)),
                      Expr::And(Expr::Not(a), b));
    }
  }
  throw std::logic_error("unreachable");
}

ExprPtr nnf_pos(const ExprPtr& e);

ExprPtr nnf_neg(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::ConstFalse: return Expr::True();
    case ExprKind::ConstTrue: return Expr::False();
    case ExprKind::Var: return Expr::Not(e);
    case ExprKind::Not: return nnf_pos(e->child());
    case ExprKind::And:
      return Expr::Or(nnf_neg(e->lhs()), nnf_neg(e->rhs()));
    case ExprKind::Or:
      return Expr::And(nnf_neg(e->lhs()), nnf_neg(e->rhs()));
    case ExprKind::Xor: break;
  }
  throw std::logic_error("xor survived expansion");
}

ExprPtr nnf_pos(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::ConstFalse:
    case ExprKind::ConstTrue:
    case ExprKind::Var:
      return e;
    case ExprKind::Not: return nnf_neg(e->child());
    case ExprKind::And:
      return Expr::And(nnf_pos(e->lhs()), nnf_pos(e->rhs()));
    case ExprKind::Or:
      return Expr::Or(nnf_pos(e->lhs()), nnf_pos(e->rhs()));
    case ExprKind::Xor: break;
  }
  throw std::logic_error("xor survived expansion");
}

bool contains_xor(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::ConstFalse:
    case ExprKind::ConstTrue:
    case ExprKind::Var:
      return false;
    case ExprKind::Not:
      return contains_xor(*e.child());
    case ExprKind::And:
    case ExprKind::Or:
      return contains_xor(*e.lhs()) || contains_xor(*e.rhs());
    case ExprKind::Xor:
      return true;
  }
  return false;
}

// First row where the tables disagree, decoded as an assignment.
std::optional<Assignment> first_difference(const TruthTable& a,
                                           const TruthTable& b) {
  const TruthTable diff = a ^ b;
  std::optional<Assignment> out;
  diff.for_each_one([&](std::uint64_t index) {
    if (!out) {
      out = assignment_from_index(diff.arity(), index);
    }
  });
  return out;
}

}  // namespace

ExprPtr demorgan_negate(const ExprPtr& e, XorPolicy policy) {
  if (!e) {
    throw std::invalid_argument("null formula");
  }
  if (contains_xor(*e)) {
    if (policy == XorPolicy::Reject) {
      throw std::invalid_argument(
          "xor has no De Morgan dual; use XorPolicy::Expand");
    }
    return nnf_neg(expand_xor(e));
  }
  return nnf_neg(e);
}

TheoremReport verify_dayenu_theorem(int n) {
  TheoremReport report;
  report.n = n;
  report.expected_count = static_cast<std::uint64_t>(n) + 1;

  const TruthTable negated = ~dayenu(n);
  const Dnf dnf = full_dnf(negated);
  report.minterm_count = dnf.size();

  const std::vector<Assignment> expected = staircase_set(n);
  report.staircase_match = dnf.size() == expected.size();
  if (report.staircase_match) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (dnf.minterms()[i].to_assignment() != expected[i]) {
        report.staircase_match = false;
        report.counterexample = expected[i];
        break;
      }
    }
  } else {
    // Count already differs; report the first row the two sides disagree on.
    std::size_t i = 0;
    while (i < dnf.size() && i < expected.size() &&
           dnf.minterms()[i].to_assignment() == expected[i]) {
      ++i;
    }
    report.counterexample = i < dnf.size() ? dnf.minterms()[i].to_assignment()
                                           : expected[i];
  }

  const TruthTable via_demorgan = compile(demorgan_negate(dayenu_expr(n)), n);
  report.demorgan_match = via_demorgan == negated;
  if (!report.demorgan_match && !report.counterexample) {
    report.counterexample = first_difference(via_demorgan, negated);
  }

  report.pass = report.minterm_count == report.expected_count &&
                report.staircase_match && report.demorgan_match;
  return report;
}

InductionReport verify_induction_step(int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "the induction step needs arity at least 3, got " + std::to_string(n));
  }
  InductionReport report;
  report.n = n;

  const TruthTable lhs = ~dayenu(n);
  // ~D_{n-1} widened to n variables; compiling at explicit arity ignores x_n.
  const TruthTable prev = compile(Expr::Not(dayenu_expr(n - 1)), n);
  const TruthTable last_pair =
      ~TruthTable::variable(n, n - 1) | TruthTable::variable(n, n);

  const TruthTable factored = prev & last_pair;
  report.factored_match = factored == lhs;
  if (!report.factored_match) {
    report.counterexample = first_difference(factored, lhs);
  }

  const TruthTable distributed = (prev & ~TruthTable::variable(n, n - 1)) |
                                 (prev & TruthTable::variable(n, n));
  report.distributed_match = distributed == lhs;
  if (!report.distributed_match && !report.counterexample) {
    report.counterexample = first_difference(distributed, lhs);
  }

  report.pass = report.factored_match && report.distributed_match;
  return report;
}

}  // namespace dayenu
