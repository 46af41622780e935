#include "hyperorbit/scalar_expr.hpp"

#include <cctype>

namespace hyperorbit {

struct ScalarExpr::Node {
  enum Kind { Rat, Pi, I, Sqrt, Exp, Neg, Add, Sub, Mul, Div, Pow } kind;
  Rational rat;       // Rat
  long long d = 0;    // Sqrt radicand
  long pexp = 0;      // Pow exponent
  std::shared_ptr<const Node> a, b;

  explicit Node(Kind k) : kind(k) {}
};

namespace {

using NodePtr = std::shared_ptr<const ScalarExpr::Node>;
using Node = ScalarExpr::Node;

NodePtr make(Node::Kind k) { return std::make_shared<Node>(k); }

NodePtr make1(Node::Kind k, NodePtr a) {
  auto n = std::make_shared<Node>(k);
  n->a = std::move(a);
  return n;
}

NodePtr make2(Node::Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>(k);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ScalarParseError("trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw ScalarParseError(std::string("expected '") + c + "'", pos_);
  }

  bool eat_word(const char* w) {
    skip_ws();
    size_t len = std::strlen(w);
    if (s_.compare(pos_, len, w) == 0) {
      // must not continue into an identifier
      size_t end = pos_ + len;
      if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end])))
        return false;
      pos_ = end;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ScalarParseError("expected digits", pos_);
    return s_.substr(start, pos_ - start);
  }

  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      if (eat('+'))
        e = make2(Node::Add, e, term());
      else if (eat('-'))
        e = make2(Node::Sub, e, term());
      else
        return e;
    }
  }

  NodePtr term() {
    NodePtr e = factor();
    for (;;) {
      if (eat('*'))
        e = make2(Node::Mul, e, factor());
      else if (eat('/'))
        e = make2(Node::Div, e, factor());
      else
        return e;
    }
  }

  NodePtr factor() {
    if (eat('-')) return make1(Node::Neg, factor());
    if (eat('+')) return factor();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      std::string ds = digits();
      auto n = std::make_shared<Node>(Node::Pow);
      n->a = base;
      n->pexp = std::stol(ds) * (neg ? -1 : 1);
      return n;
    }
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ScalarParseError("unexpected end of input", pos_);
    if (eat_word("pi")) return make(Node::Pi);
    if (eat_word("i")) return make(Node::I);
    if (eat_word("sqrt")) {
      expect('(');
      std::string ds = digits();
      expect(')');
      auto n = std::make_shared<Node>(Node::Sqrt);
      n->d = std::stoll(ds);
      if (n->d < 1) throw ScalarParseError("sqrt radicand must be positive", pos_);
      return n;
    }
    if (eat_word("exp")) {
      expect('(');
      NodePtr inner = expr();
      expect(')');
      return make1(Node::Exp, inner);
    }
    if (eat('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      auto n = std::make_shared<Node>(Node::Rat);
      n->rat = Rational(BigInt(num));
      return n;
    }
    throw ScalarParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

bool node_exact(const Node& n) {
  switch (n.kind) {
    case Node::Exp:
      return false;
    case Node::Rat:
    case Node::Pi:
    case Node::I:
    case Node::Sqrt:
      return true;
    case Node::Neg:
    case Node::Pow:
      return node_exact(*n.a);
    default:
      return node_exact(*n.a) && node_exact(*n.b);
  }
}

ExactComplex eval_exact(const Node& n) {
  switch (n.kind) {
    case Node::Rat:
      return ExactComplex(ExactReal(n.rat));
    case Node::Pi:
      return ExactComplex(ExactReal::pi());
    case Node::I:
      return ExactComplex::i();
    case Node::Sqrt:
      return ExactComplex(ExactReal::sqrt_int(n.d));
    case Node::Exp:
      throw NotExactError();
    case Node::Neg:
      return -eval_exact(*n.a);
    case Node::Add:
      return eval_exact(*n.a) + eval_exact(*n.b);
    case Node::Sub:
      return eval_exact(*n.a) - eval_exact(*n.b);
    case Node::Mul:
      return eval_exact(*n.a) * eval_exact(*n.b);
    case Node::Div:
      return eval_exact(*n.a) / eval_exact(*n.b);
    case Node::Pow: {
      ExactComplex base = eval_exact(*n.a);
      long e = n.pexp;
      if (e < 0) {
        base = base.inverse();
        e = -e;
      }
      ExactComplex acc(1);
      for (long t = 0; t < e; ++t) acc = acc * base;
      return acc;
    }
  }
  throw std::logic_error("unhandled node");
}

BigComplex eval_numeric(const Node& n, mpfr_prec_t prec) {
  switch (n.kind) {
    case Node::Rat:
      return {BigFloat::from_rational(n.rat, prec), BigFloat(prec)};
    case Node::Pi:
      return {BigFloat::pi(prec), BigFloat(prec)};
    case Node::I:
      return {BigFloat(prec), BigFloat::from_long(1, prec)};
    case Node::Sqrt:
      return {BigFloat::sqrt_ui(static_cast<unsigned long>(n.d), prec), BigFloat(prec)};
    case Node::Exp:
      return eval_numeric(*n.a, prec).exp();
    case Node::Neg:
      return -eval_numeric(*n.a, prec);
    case Node::Add:
      return eval_numeric(*n.a, prec) + eval_numeric(*n.b, prec);
    case Node::Sub:
      return eval_numeric(*n.a, prec) - eval_numeric(*n.b, prec);
    case Node::Mul:
      return eval_numeric(*n.a, prec) * eval_numeric(*n.b, prec);
    case Node::Div:
      return eval_numeric(*n.a, prec) / eval_numeric(*n.b, prec);
    case Node::Pow: {
      BigComplex base = eval_numeric(*n.a, prec);
      long e = n.pexp;
      if (e < 0) {
        base = base.inverse();
        e = -e;
      }
      BigComplex acc = BigComplex::from_long(1, prec);
      for (long t = 0; t < e; ++t) acc = acc * base;
      return acc;
    }
  }
  throw std::logic_error("unhandled node");
}

int precedence(Node::Kind k) {
  switch (k) {
    case Node::Add:
    case Node::Sub:
      return 1;
    case Node::Mul:
    case Node::Div:
      return 2;
    case Node::Neg:
      return 3;
    case Node::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Node& n, std::string& out, int parent_prec) {
  int prec = precedence(n.kind);
  bool paren = prec < parent_prec;
  if (paren) out += "(";
  switch (n.kind) {
    case Node::Rat: {
      out += rational_to_string(n.rat);
      break;
    }
    case Node::Pi:
      out += "pi";
      break;
    case Node::I:
      out += "i";
      break;
    case Node::Sqrt:
      out += "sqrt(" + std::to_string(n.d) + ")";
      break;
    case Node::Exp: {
      out += "exp(";
      print(*n.a, out, 0);
      out += ")";
      break;
    }
    case Node::Neg:
      out += "-";
      print(*n.a, out, precedence(Node::Neg) + 1);
      break;
    case Node::Add:
      print(*n.a, out, prec);
      out += " + ";
      print(*n.b, out, prec + 1);
      break;
    case Node::Sub:
      print(*n.a, out, prec);
      out += " - ";
      print(*n.b, out, prec + 1);
      break;
    case Node::Mul:
      print(*n.a, out, prec);
      out += "*";
      print(*n.b, out, prec + 1);
      break;
    case Node::Div:
      print(*n.a, out, prec);
      out += "/";
      print(*n.b, out, prec + 1);
      break;
    case Node::Pow:
      print(*n.a, out, prec + 1);
      out += "^" + std::to_string(n.pexp);
      break;
  }
  if (paren) out += ")";
}

void radicands(const Node& n, std::set<long long>& out) {
  if (n.kind == Node::Sqrt) {
    // record the squarefree part actually used
    long long f = n.d;
    for (long long p = 2; p * p <= f; ++p)
      while (f % (p * p) == 0) f /= p * p;
    if (f > 1) out.insert(f);
  }
  if (n.a) radicands(*n.a, out);
  if (n.b) radicands(*n.b, out);
}

}  // namespace

ScalarExpr::ScalarExpr() {
  auto n = std::make_shared<Node>(Node::Rat);
  n->rat = 0;
  root_ = n;
}

ScalarExpr ScalarExpr::parse(const std::string& text) {
  Parser p(text);
  return ScalarExpr(p.run());
}

ScalarExpr ScalarExpr::from_rational(const Rational& q) {
  auto n = std::make_shared<Node>(Node::Rat);
  n->rat = q;
  return ScalarExpr(std::move(n));
}

bool ScalarExpr::is_exact() const { return node_exact(*root_); }

ExactComplex ScalarExpr::to_exact() const { return eval_exact(*root_); }

BigComplex ScalarExpr::to_numeric(mpfr_prec_t prec) const { return eval_numeric(*root_, prec); }

std::string ScalarExpr::to_string() const {
  std::string out;
  print(*root_, out, 0);
  return out;
}

void ScalarExpr::collect_radicands(std::set<long long>& out) const { radicands(*root_, out); }

}  // namespace hyperorbit
