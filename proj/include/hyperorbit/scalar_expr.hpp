#ifndef HYPERORBIT_SCALAR_EXPR_HPP
#define HYPERORBIT_SCALAR_EXPR_HPP

#include <memory>
#include <set>
#include <string>

#include "hyperorbit/bigfloat.hpp"
#include "hyperorbit/exact.hpp"

namespace hyperorbit {

struct ScalarParseError : std::runtime_error {
  ScalarParseError(const std::string& msg, size_t column_)
      : std::runtime_error(msg + " at column " + std::to_string(column_ + 1)), column(column_) {}
  size_t column;
};

struct NotExactError : std::runtime_error {
  NotExactError() : std::runtime_error("expression contains exp(): numeric-only") {}
};

/**
 * Parsed scalar literal. Grammar:
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := ('-'|'+')* power
 *   power  := atom ('^' ('-'? digits))?
 *   atom   := digits ('/' digits)? | 'pi' | 'i' | 'sqrt' '(' digits ')'
 *           | 'exp' '(' expr ')' | '(' expr ')'
 *
 * Everything except exp() evaluates exactly in the field tower; exp() makes
 * the value numeric-only.
 */
class ScalarExpr {
 public:
  struct Node;  // expression tree; defined in the implementation

  ScalarExpr();  // zero

  static ScalarExpr parse(const std::string& text);
  static ScalarExpr from_rational(const Rational& q);

  bool is_exact() const;  // no exp() leaf
  ExactComplex to_exact() const;
  BigComplex to_numeric(mpfr_prec_t prec) const;
  std::string to_string() const;  // canonical form; parse(to_string()) round-trips
  void collect_radicands(std::set<long long>& out) const;

 private:
  explicit ScalarExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

}  // namespace hyperorbit

#endif
