#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "projindex/coh_class.hpp"

namespace projindex {

struct ExprNode;

/// Parsed polynomial expression. Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// so "3/2*x" and "x^2/8" both denote rational multiples. The right operand of
/// '/' must evaluate to a nonzero constant.
class Expression {
 public:
  /// Throws ParseError carrying the 1-based column of the offending token.
  static Expression parse(std::string_view text);

  Expression(const Expression&);
  Expression& operator=(const Expression&);
  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;
  ~Expression();

  const std::string& text() const { return text_; }

  /// Polynomial over the given variable names, without any reduction.
  RawPolynomial to_raw(const std::vector<std::string>& variables) const;

  /// Evaluates inside the model's ring, reducing after every operation.
  CohClass evaluate(const ModelPtr& model) const;

 private:
  Expression() = default;
  std::string text_;
  std::shared_ptr<const ExprNode> root_;
};

/// Shorthand for Expression::parse(text).evaluate(model).
CohClass parse_class(std::string_view text, const ModelPtr& model);

/// Normal-form rendering that parse_class reads back, e.g. "1 + 3/2*x + x^2".
std::string format_class(const CohClass& a);
/// Human rendering with cyclotomic coefficients in parentheses.
std::string format_class(const CycClass& a);

/// Renders a sparse polynomial over named variables (used for jets).
std::string format_raw(const RawPolynomial& p, const std::vector<std::string>& variables);

}  // namespace projindex
