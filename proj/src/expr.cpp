#include "dayenu/expr.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace dayenu {

namespace {

// Indices above this are certainly typos; the arity cap is far smaller.
constexpr long kMaxVarIndex = 1'000'000;

}  // namespace

Expr::Expr(ExprKind kind, int var, ExprPtr a, ExprPtr b)
    : kind_(kind),
      var_index_(var),
      lhs_(std::move(a)),
      rhs_(std::move(b)),
      max_var_(var) {
  if (lhs_) {
    max_var_ = std::max(max_var_, lhs_->max_var());
  }
  if (rhs_) {
    max_var_ = std::max(max_var_, rhs_->max_var());
  }
}

ExprPtr Expr::True() {
  static const ExprPtr node(new Expr(ExprKind::ConstTrue, 0, nullptr, nullptr));
  return node;
}

ExprPtr Expr::False() {
  static const ExprPtr node(new Expr(ExprKind::ConstFalse, 0, nullptr, nullptr));
  return node;
}

ExprPtr Expr::Var(int index) {
  if (index < 1) {
    throw std::invalid_argument("variable index must be at least 1, got " +
                                std::to_string(index));
  }
  return ExprPtr(new Expr(ExprKind::Var, index, nullptr, nullptr));
}

ExprPtr Expr::Not(ExprPtr child) {
  if (!child) {
    throw std::invalid_argument("null child");
  }
  return ExprPtr(new Expr(ExprKind::Not, 0, std::move(child), nullptr));
}

ExprPtr Expr::And(ExprPtr lhs, ExprPtr rhs) {
  if (!lhs || !rhs) {
    throw std::invalid_argument("null child");
  }
  return ExprPtr(new Expr(ExprKind::And, 0, std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::Or(ExprPtr lhs, ExprPtr rhs) {
  if (!lhs || !rhs) {
    throw std::invalid_argument("null child");
  }
  return ExprPtr(new Expr(ExprKind::Or, 0, std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::Xor(ExprPtr lhs, ExprPtr rhs) {
  if (!lhs || !rhs) {
    throw std::invalid_argument("null child");
  }
  return ExprPtr(new Expr(ExprKind::Xor, 0, std::move(lhs), std::move(rhs)));
}

int Expr::var_index() const {
  if (kind_ != ExprKind::Var) {
    throw std::logic_error("var_index() on a non-variable node");
  }
  return var_index_;
}

const ExprPtr& Expr::child() const {
  if (kind_ != ExprKind::Not) {
    throw std::logic_error("child() on a non-negation node");
  }
  return lhs_;
}

const ExprPtr& Expr::lhs() const {
  if (kind_ != ExprKind::And && kind_ != ExprKind::Or &&
      kind_ != ExprKind::Xor) {
    throw std::logic_error("lhs() on a non-binary node");
  }
  return lhs_;
}

const ExprPtr& Expr::rhs() const {
  if (kind_ != ExprKind::And && kind_ != ExprKind::Or &&
      kind_ != ExprKind::Xor) {
    throw std::logic_error("rhs() on a non-binary node");
  }
  return rhs_;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case ExprKind::ConstFalse:
    case ExprKind::ConstTrue:
      return true;
    case ExprKind::Var:
      return a.var_index() == b.var_index();
    case ExprKind::Not:
      return structurally_equal(*a.child(), *b.child());
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Xor:
      return structurally_equal(*a.lhs(), *b.lhs()) &&
             structurally_equal(*a.rhs(), *b.rhs());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) {
      out += (i + 1 == expected.size()) ? " or " : ", ";
    }
    out += expected[i];
  }
  return out;
}

enum class TokenKind { LParen, RParen, Tilde, Amp, Caret, Pipe, True, False, Var, End };

struct Token {
  TokenKind kind;
  std::size_t position;
  int var_index = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      return {TokenKind::End, start};
    }
    const char c = text_[pos_++];
    switch (c) {
      case '(': return {TokenKind::LParen, start};
      case ')': return {TokenKind::RParen, start};
      case '~': return {TokenKind::Tilde, start};
      case '&': return {TokenKind::Amp, start};
      case '^': return {TokenKind::Caret, start};
      case '|': return {TokenKind::Pipe, start};
      case 'T': return {TokenKind::True, start};
      case 'F': return {TokenKind::False, start};
      case 'x': return lex_var(start);
      default:
        throw ParseError(start, {"'T'", "'F'", "a variable", "'('", "'~'"},
                         std::string("'") + c + "'");
    }
  }

 private:
  Token lex_var(std::size_t start) {
    const std::size_t digits_start = pos_;
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxVarIndex) {
        throw ParseError(start, {"a variable index at most 1000000"},
                         "a larger index");
      }
      ++pos_;
    }
    if (pos_ == digits_start) {
      throw ParseError(pos_, {"digits after 'x'"},
                       pos_ < text_.size()
                           ? std::string("'") + text_[pos_] + "'"
                           : std::string("end of input"));
    }
    if (value == 0) {
      throw ParseError(start, {"a variable index of at least 1"}, "'x0'");
    }
    return {TokenKind::Var, start, static_cast<int>(value)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string token_name(const Token& t) {
  switch (t.kind) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::True: return "'T'";
    case TokenKind::False: return "'F'";
    case TokenKind::Var: return "x" + std::to_string(t.var_index);
    case TokenKind::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  ExprPtr parse() {
    ExprPtr e = parse_or();
    expect(TokenKind::End, "end of input");
    return e;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  void expect(TokenKind kind, const std::string& what) {
    if (current_.kind != kind) {
      throw ParseError(current_.position, {what}, token_name(current_));
    }
    advance();
  }

  ExprPtr parse_or() {
    ExprPtr e = parse_xor();
    while (current_.kind == TokenKind::Pipe) {
      advance();
      e = Expr::Or(std::move(e), parse_xor());
    }
    return e;
  }

  ExprPtr parse_xor() {
    ExprPtr e = parse_and();
    while (current_.kind == TokenKind::Caret) {
      advance();
      e = Expr::Xor(std::move(e), parse_and());
    }
    return e;
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_unary();
    while (current_.kind == TokenKind::Amp) {
      advance();
      e = Expr::And(std::move(e), parse_unary());
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (current_.kind == TokenKind::Tilde) {
      advance();
      return Expr::Not(parse_unary());
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    switch (current_.kind) {
      case TokenKind::True:
        advance();
        return Expr::True();
      case TokenKind::False:
        advance();
        return Expr::False();
      case TokenKind::Var: {
        ExprPtr e = Expr::Var(current_.var_index);
        advance();
        return e;
      }
      case TokenKind::LParen: {
        advance();
        ExprPtr e = parse_or();
        expect(TokenKind::RParen, "')'");
        return e;
      }
      default:
        throw ParseError(current_.position,
                         {"'T'", "'F'", "a variable", "'('", "'~'"},
                         token_name(current_));
    }
  }

  Lexer lexer_;
  Token current_{TokenKind::End, 0};
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("syntax error at position " +
                         std::to_string(position) + ": expected " +
                         describe_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

ExprPtr parse_formula(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// ~ binds tightest, then & then ^ then |; atoms never need parentheses.
int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Or: return 1;
    case ExprKind::Xor: return 2;
    case ExprKind::And: return 3;
    case ExprKind::Not: return 4;
    default: return 5;
  }
}

void print_node(const Expr& e, int min_prec, std::string& out) {
  const int prec = precedence(e.kind());
  const bool parens = prec < min_prec;
  if (parens) {
    out += '(';
  }
  switch (e.kind()) {
    case ExprKind::ConstFalse:
      out += 'F';
      break;
    case ExprKind::ConstTrue:
      out += 'T';
      break;
    case ExprKind::Var:
      out += 'x';
      out += std::to_string(e.var_index());
      break;
    case ExprKind::Not:
      out += '~';
      print_node(*e.child(), prec, out);
      break;
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Xor: {
      // Left associativity: the right operand must bind strictly tighter.
      print_node(*e.lhs(), prec, out);
      out += e.kind() == ExprKind::And ? " & "
             : e.kind() == ExprKind::Or ? " | "
                                        : " ^ ";
      print_node(*e.rhs(), prec + 1, out);
      break;
    }
  }
  if (parens) {
    out += ')';
  }
}

}  // namespace

std::string print_formula(const Expr& e) {
  std::string out;
  print_node(e, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Semantics
// ---------------------------------------------------------------------------

bool eval_formula(const Expr& e, const Assignment& a) {
  if (e.max_var() > a.arity()) {
    throw std::invalid_argument("assignment arity " +
                                std::to_string(a.arity()) +
                                " does not cover variable x" +
                                std::to_string(e.max_var()));
  }
  switch (e.kind()) {
    case ExprKind::ConstFalse: return false;
    case ExprKind::ConstTrue: return true;
    case ExprKind::Var: return a.value(e.var_index());
    case ExprKind::Not: return !eval_formula(*e.child(), a);
    case ExprKind::And: return eval_formula(*e.lhs(), a) && eval_formula(*e.rhs(), a);
    case ExprKind::Or: return eval_formula(*e.lhs(), a) || eval_formula(*e.rhs(), a);
    case ExprKind::Xor: return eval_formula(*e.lhs(), a) != eval_formula(*e.rhs(), a);
  }
  throw std::logic_error("unreachable");
}

TruthTable compile(const Expr& e, int n) {
  if (n < e.max_var()) {
    throw std::invalid_argument("arity " + std::to_string(n) +
                                " does not cover variable x" +
                                std::to_string(e.max_var()));
  }
  switch (e.kind()) {
    case ExprKind::ConstFalse: return TruthTable::constant(n, false);
    case ExprKind::ConstTrue: return TruthTable::constant(n, true);
    case ExprKind::Var: return TruthTable::variable(n, e.var_index());
    case ExprKind::Not: return ~compile(*e.child(), n);
    case ExprKind::And: return compile(*e.lhs(), n) & compile(*e.rhs(), n);
    case ExprKind::Or: return compile(*e.lhs(), n) | compile(*e.rhs(), n);
    case ExprKind::Xor: return compile(*e.lhs(), n) ^ compile(*e.rhs(), n);
  }
  throw std::logic_error("unreachable");
}

TruthTable compile(const Expr& e) {
  if (e.max_var() == 0) {
    throw std::invalid_argument(
        "formula has no variables; pass an explicit arity");
  }
  return compile(e, e.max_var());
}

}  // namespace dayenu
