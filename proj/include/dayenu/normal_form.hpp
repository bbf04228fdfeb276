#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dayenu/expr.hpp"
#include "dayenu/truth_table.hpp"

namespace dayenu {

// A full product term: one literal per variable, plain or negated. In
// bijection with assignments (plain <-> T, negated <-> F).
class Minterm {
 public:
  explicit Minterm(const Assignment& a);
  Minterm(int n, std::vector<bool> plain);

  int arity() const { return static_cast<int>(plain_.size()); }
  bool plain(int var) const;  // 1-based; false means the literal is ~x_var

  Assignment to_assignment() const;
  std::uint64_t index() const;

  ExprPtr to_expr() const;      // left-folded chain of & literals
  std::string to_string() const;

  bool operator==(const Minterm&) const = default;

 private:
  std::vector<bool> plain_;
};

// Full disjunctive normal form: minterms strictly ascending by assignment
// index; the empty Dnf is the constant false.
class Dnf {
 public:
  Dnf(int n, std::vector<Minterm> minterms);

  int arity() const { return n_; }
  std::size_t size() const { return minterms_.size(); }
  const std::vector<Minterm>& minterms() const { return minterms_; }

  bool operator==(const Dnf&) const = default;

 private:
  int n_;
  std::vector<Minterm> minterms_;
};

// One minterm per true row of t, ascending; compiles back to exactly t.
Dnf full_dnf(const TruthTable& t);

// Or-chain of the minterm expressions; ConstFalse for the empty Dnf.
ExprPtr dnf_to_expr(const Dnf& d);

enum class XorPolicy { Reject, Expand };

// Negation normal form of ~e: negations pushed to the literals, double
// negations cancelled. Xor nodes are rejected unless policy expands
// a ^ b into (a & ~b) | (~a & b) first.
ExprPtr demorgan_negate(const ExprPtr& e, XorPolicy policy = XorPolicy::Reject);

// Checks that the full DNF of ~D_n is exactly the n+1 staircase minterms and
// that the De Morgan conjunction form agrees with the table negation.
struct TheoremReport {
  int n = 0;
  std::uint64_t minterm_count = 0;
  std::uint64_t expected_count = 0;
  bool staircase_match = false;
  bool demorgan_match = false;
  bool pass = false;
  std::optional<Assignment> counterexample;
};

TheoremReport verify_dayenu_theorem(int n);

// Checks the induction step ~D_n = ~D_{n-1} & (~x_{n-1} | x_n), with
// ~D_{n-1} widened to arity n, plus its distributed form.
struct InductionReport {
  int n = 0;
  bool factored_match = false;
  bool distributed_match = false;
  bool pass = false;
  std::optional<Assignment> counterexample;
};

InductionReport verify_induction_step(int n);

}  // namespace dayenu
