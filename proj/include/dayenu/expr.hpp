#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dayenu/truth_table.hpp"

namespace dayenu {

enum class ExprKind {
  ConstFalse,
  ConstTrue,
  Var,
  Not,
  And,
  Or,
  Xor,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable propositional formula tree. Subtrees are shared freely; the
// factories are the only way to build nodes, so every Expr is well formed.
class Expr {
 public:
  static ExprPtr True();
  static ExprPtr False();
  static ExprPtr Var(int index);  // 1-based, index >= 1
  static ExprPtr Not(ExprPtr child);
  static ExprPtr And(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr Or(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr Xor(ExprPtr lhs, ExprPtr rhs);

  ExprKind kind() const { return kind_; }
  int var_index() const;        // Var nodes only
  const ExprPtr& child() const; // Not nodes only
  const ExprPtr& lhs() const;   // binary nodes only
  const ExprPtr& rhs() const;   // binary nodes only

  // Largest variable index occurring in the tree, 0 for constant formulas.
  int max_var() const { return max_var_; }

 private:
  Expr(ExprKind kind, int var, ExprPtr a, ExprPtr b);

  ExprKind kind_;
  int var_index_;
  ExprPtr lhs_;
  ExprPtr rhs_;
  int max_var_;
};

bool structurally_equal(const Expr& a, const Expr& b);

// Syntax error with the offending position (0-based byte offset) and the
// token kinds that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& found);
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Grammar, lowest precedence first (binaries left-associative):
//   formula := or
//   or      := xor ('|' xor)*
//   xor     := and ('^' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | atom
//   atom    := 'T' | 'F' | 'x' digits | '(' formula ')'
ExprPtr parse_formula(std::string_view text);

// Minimal-parentheses rendering; parse_formula(print_formula(e)) rebuilds
// exactly the same tree.
std::string print_formula(const Expr& e);
inline std::string print_formula(const ExprPtr& e) { return print_formula(*e); }

// Classical evaluation at a single assignment; a must cover max_var().
bool eval_formula(const Expr& e, const Assignment& a);

// Extensional semantics: the 2^n table of e. n must cover max_var().
TruthTable compile(const Expr& e, int n);
inline TruthTable compile(const ExprPtr& e, int n) { return compile(*e, n); }

// Arity defaults to the largest variable index.
TruthTable compile(const Expr& e);
inline TruthTable compile(const ExprPtr& e) { return compile(*e); }

}  // namespace dayenu
