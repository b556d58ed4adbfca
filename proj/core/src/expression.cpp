#include "projindex/expression.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <variant>

namespace projindex {

struct ExprNode {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow };
  Kind kind;
  int column = 0;
  Rational number;
  std::string name;
  int exponent = 0;
  std::shared_ptr<const ExprNode> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    NodePtr n = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression '" + std::string(text_) + "': " + msg, 0, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(ExprNode::Kind k, int column, NodePtr l, NodePtr r) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->column = column;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  NodePtr expr() {
    NodePtr n = term();
    while (true) {
      skip_space();
      const int col = static_cast<int>(pos_) + 1;
      if (accept('+')) n = binary(ExprNode::Kind::add, col, n, term());
      else if (accept('-')) n = binary(ExprNode::Kind::sub, col, n, term());
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = factor();
    while (true) {
      skip_space();
      const int col = static_cast<int>(pos_) + 1;
      if (accept('*')) n = binary(ExprNode::Kind::mul, col, n, factor());
      else if (accept('/')) n = binary(ExprNode::Kind::div, col, n, factor());
      else return n;
    }
  }

  NodePtr factor() {
    skip_space();
    const int col = static_cast<int>(pos_) + 1;
    if (accept('-')) return binary(ExprNode::Kind::neg, col, factor(), nullptr);
    if (accept('+')) return factor();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    skip_space();
    const int col = static_cast<int>(pos_) + 1;
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer");
    if (pos_ - start > 6) fail("exponent too large");
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::pow;
    n->column = col;
    n->lhs = std::move(base);
    n->exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return n;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const int col = static_cast<int>(pos_) + 1;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::number;
      n->column = col;
      n->number = Rational::parse(text_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::variable;
      n->column = col;
      n->name = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Evaluation is shared between raw polynomials and reduced classes.
struct RawAlgebra {
  const std::vector<std::string>& names;
  using Value = RawPolynomial;

  static void clean(Value& v) {
    for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
  }
  Value constant(const Rational& c) const {
    Value v;
    if (!c.is_zero()) v[Monomial{std::vector<int>(names.size(), 0)}] = c;
    return v;
  }
  std::optional<Value> variable(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    Monomial m{std::vector<int>(names.size(), 0)};
    m.exponents[static_cast<std::size_t>(it - names.begin())] = 1;
    return Value{{m, Rational(1)}};
  }
  Value add(Value a, const Value& b) const {
    for (const auto& [m, c] : b) a[m] += c;
    clean(a);
    return a;
  }
  Value scale(Value a, const Rational& s) const {
    for (auto& [m, c] : a) c *= s;
    clean(a);
    return a;
  }
  Value mul(const Value& a, const Value& b) const {
    Value r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) r[ma * mb] += ca * cb;
    clean(r);
    return r;
  }
  Value one() const { return constant(Rational(1)); }
  std::optional<Rational> as_constant(const Value& v) const {
    if (v.empty()) return Rational(0);
    if (v.size() == 1 && v.begin()->first.is_one()) return v.begin()->second;
    return std::nullopt;
  }
};

struct ClassAlgebra {
  const ModelPtr& model;
  using Value = CohClass;

  Value constant(const Rational& c) const { return CohClass::constant(model, c); }
  std::optional<Value> variable(const std::string& name) const {
    auto idx = model->generator_index(name);
    if (!idx) return std::nullopt;
    return CohClass::monomial(model, model->generator_monomial(*idx), Rational(1));
  }
  Value add(Value a, const Value& b) const { return a += b; }
  Value scale(Value a, const Rational& s) const { return a *= s; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value one() const { return constant(Rational(1)); }
  std::optional<Rational> as_constant(const Value& v) const {
    for (const auto& [m, c] : v.terms())
      if (!m.is_one()) return std::nullopt;
    return v.constant_term();
  }
};

template <class Algebra>
typename Algebra::Value eval(const ExprNode& n, const Algebra& alg, const std::string& text) {
  using K = ExprNode::Kind;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("expression '" + text + "': " + msg, 0, n.column);
  };
  switch (n.kind) {
    case K::number: return alg.constant(n.number);
    case K::variable: {
      auto v = alg.variable(n.name);
      if (!v) throw fail("unknown generator '" + n.name + "'");
      return *v;
    }
    case K::add: return alg.add(eval(*n.lhs, alg, text), eval(*n.rhs, alg, text));
    case K::sub: return alg.add(eval(*n.lhs, alg, text), alg.scale(eval(*n.rhs, alg, text), Rational(-1)));
    case K::mul: return alg.mul(eval(*n.lhs, alg, text), eval(*n.rhs, alg, text));
    case K::div: {
      auto denom = alg.as_constant(eval(*n.rhs, alg, text));
      if (!denom) throw fail("divisor must be a constant");
      if (denom->is_zero()) throw fail("division by zero");
      return alg.scale(eval(*n.lhs, alg, text), denom->inverse());
    }
    case K::neg: return alg.scale(eval(*n.lhs, alg, text), Rational(-1));
    case K::pow: {
      auto base = eval(*n.lhs, alg, text);
      auto result = alg.one();
      for (int i = 0; i < n.exponent; ++i) result = alg.mul(result, base);
      return result;
    }
  }
  throw fail("internal: unknown node");
}

template <class Coeff>
std::string format_generic(const BasicClass<Coeff>& a, bool parenthesize) {
  const auto& model = *a.model();
  std::vector<std::pair<Monomial, Coeff>> terms(a.terms().begin(), a.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    const int dx = model.degree(x.first), dy = model.degree(y.first);
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<Coeff, Rational>) {
      negative = c.sign() < 0;
      coeff = (negative ? -c : c).to_string();
    } else {
      if (auto r = c.to_rational()) {
        negative = r->sign() < 0;
        coeff = (negative ? -*r : *r).to_string();
      } else {
        coeff = parenthesize ? "(" + c.to_string() + ")" : c.to_string();
      }
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (m.is_one()) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << model.format(m);
    }
  }
  return os.str();
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(text).parse();
  return e;
}

Expression::Expression(const Expression&) = default;
Expression& Expression::operator=(const Expression&) = default;
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::~Expression() = default;

RawPolynomial Expression::to_raw(const std::vector<std::string>& variables) const {
  return eval(*root_, RawAlgebra{variables}, text_);
}

CohClass Expression::evaluate(const ModelPtr& model) const { return eval(*root_, ClassAlgebra{model}, text_); }

CohClass parse_class(std::string_view text, const ModelPtr& model) { return Expression::parse(text).evaluate(model); }

std::string format_class(const CohClass& a) { return format_generic(a, true); }
std::string format_class(const CycClass& a) { return format_generic(a, true); }

std::string format_raw(const RawPolynomial& p, const std::vector<std::string>& variables) {
  if (p.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
  auto total = [](const Monomial& m) {
    int t = 0;
    for (int e : m.exponents) t += e;
    return t;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    if (total(x.first) != total(y.first)) return total(x.first) < total(y.first);
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c.sign() < 0;
    const std::string coeff = (negative ? -c : c).to_string();
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables.at(i);
      if (m.exponents[i] > 1) mono += "^" + std::to_string(m.exponents[i]);
    }
    if (mono.empty()) os << coeff;
    else if (coeff == "1") os << mono;
    else os << coeff << "*" << mono;
  }
  return os.str();
}

}  // namespace projindex
