#pragma once

#include <vector>

#include "dayenu/expr.hpp"
#include "dayenu/truth_table.hpp"

namespace dayenu {

// G_n = x1 & x2 & ... & xn; true only on the all-true assignment.
TruthTable god_function(int n);
ExprPtr god_expr(int n);

// D_1 is a disjunction over zero terms. Rejected unless the caller opts in
// to the constant-false reading.
enum class EmptyDayenu { Reject, AsFalse };

// D_n = (x1 & ~x2) | (x2 & ~x3) | ... | (x_{n-1} & ~x_n); true exactly where
// some performed step is immediately followed by a skipped one.
TruthTable dayenu(int n, EmptyDayenu empty = EmptyDayenu::Reject);
ExprPtr dayenu_expr(int n, EmptyDayenu empty = EmptyDayenu::Reject);

// The staircase F^(n-k) T^k: a block of falses, then a block of trues.
struct StaircaseVector {
  int n;
  int trailing_true;  // k, 0 <= k <= n

  Assignment to_assignment() const;
};

Assignment staircase_assignment(int n, int k);

// All n+1 staircase assignments, k ascending: F^n first, T^n last.
std::vector<Assignment> staircase_set(int n);

// True iff no F immediately follows a T, i.e. a is a staircase.
bool no_fall(const Assignment& a);

}  // namespace dayenu
