#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "projindex/cyclotomic.hpp"
#include "projindex/error.hpp"
#include "projindex/manifold_model.hpp"
#include "projindex/rational.hpp"

namespace projindex {

namespace detail {

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

}  // namespace detail

/// Element of a model's cohomology ring in normal form. Coefficients are
/// either Rational (CohClass) or Cyclotomic (CycClass); zero coefficients are
/// never stored.
template <class Coeff>
class BasicClass {
 public:
  using Terms = std::map<Monomial, Coeff>;

  explicit BasicClass(ModelPtr model) : model_(std::move(model)) {
    if (!model_) throw EngineError("class without a model");
  }

  static BasicClass constant(ModelPtr model, const Coeff& c) {
    return monomial(std::move(model), Monomial{}, c);
  }

  /// c * m, reduced.
  static BasicClass monomial(ModelPtr model, const Monomial& m, const Coeff& c) {
    BasicClass r(std::move(model));
    r.add_reduced(m, c);
    return r;
  }

  static BasicClass from_raw(ModelPtr model, const RawPolynomial& raw) {
    BasicClass r(std::move(model));
    for (const auto& [m, c] : raw) r.add_reduced(m, Coeff(c));
    return r;
  }

  const ModelPtr& model() const { return model_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Monomial& m) const {
    Monomial key = m;
    key.exponents.resize(model_->generators().size(), 0);
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff constant_term() const { return coefficient(model_->one()); }

  BasicClass homogeneous_part(int degree) const {
    BasicClass r(model_);
    for (const auto& [m, c] : terms_)
      if (model_->degree(m) == degree) r.terms_.emplace(m, c);
    return r;
  }

  /// Whether every stored monomial has the given degree (true for zero).
  bool is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
      if (model_->degree(m) != degree) return false;
    return true;
  }

  /// Lowest degree among the stored terms; -1 for zero.
  int min_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      const int md = model_->degree(m);
      if (d < 0 || md < d) d = md;
    }
    return d;
  }

  BasicClass& operator+=(const BasicClass& o) {
    check_model(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }

  BasicClass& operator-=(const BasicClass& o) {
    check_model(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
  }

  BasicClass& operator*=(const Coeff& s) {
    if (detail::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend BasicClass operator+(BasicClass a, const BasicClass& b) { return a += b; }
  friend BasicClass operator-(BasicClass a, const BasicClass& b) { return a -= b; }
  friend BasicClass operator*(BasicClass a, const Coeff& s) { return a *= s; }
  friend BasicClass operator*(const Coeff& s, BasicClass a) { return a *= s; }
  BasicClass operator-() const {
    BasicClass r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend BasicClass operator*(const BasicClass& a, const BasicClass& b) {
    a.check_model(b);
    BasicClass r(a.model_);
    const int dim = a.model_->dimension();
    for (const auto& [ma, ca] : a.terms_) {
      const int da = a.model_->degree(ma);
      for (const auto& [mb, cb] : b.terms_) {
        if (da + a.model_->degree(mb) > dim) continue;
        r.add_reduced(ma * mb, ca * cb);
      }
    }
    return r;
  }

  BasicClass& operator*=(const BasicClass& o) { return *this = *this * o; }

  friend bool operator==(const BasicClass& a, const BasicClass& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }

  /// Same model and equal after lifting coefficients; used across Coeff types.
  template <class Other>
  bool equals(const BasicClass<Other>& o) const {
    if (model_ != o.model()) return false;
    if (terms_.size() != o.terms().size()) return false;
    for (const auto& [m, c] : terms_) {
      auto it = o.terms().find(m);
      if (it == o.terms().end() || !(Cyclotomic(c) == Cyclotomic(it->second))) return false;
    }
    return true;
  }

 private:
  void check_model(const BasicClass& o) const {
    if (model_ != o.model_) throw EngineError("classes live on different manifold models");
  }

  void accumulate(const Monomial& m, const Coeff& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (detail::is_zero(it->second)) terms_.erase(it);
  }

  void add_reduced(const Monomial& m, const Coeff& c) {
    if (detail::is_zero(c)) return;
    for (const auto& [nm, nc] : model_->normal_form(m)) accumulate(nm, c * nc);
  }

  ModelPtr model_;
  Terms terms_;
};

using CohClass = BasicClass<Rational>;
using CycClass = BasicClass<Cyclotomic>;

inline CycClass to_cyclotomic(const CohClass& a) {
  CycClass r(a.model());
  for (const auto& [m, c] : a.terms()) r += CycClass::monomial(a.model(), m, Cyclotomic(c));
  return r;
}

/// sum_k a^k / k!; `a` must have zero constant term so the sum is finite.
template <class Coeff>
BasicClass<Coeff> exp_class(const BasicClass<Coeff>& a) {
  if (!detail::is_zero(a.constant_term())) throw EngineError("exp_class needs a nilpotent class (zero constant term)");
  BasicClass<Coeff> result = BasicClass<Coeff>::constant(a.model(), Coeff(1));
  BasicClass<Coeff> power = result;
  for (int k = 1; !power.is_zero(); ++k) {
    power = power * a;
    power *= Coeff(Rational(1, k));
    result += power;
  }
  return result;
}

/// Multiplicative inverse; the constant term must be nonzero.
template <class Coeff>
BasicClass<Coeff> inverse_class(const BasicClass<Coeff>& a) {
  const Coeff c0 = a.constant_term();
  if (detail::is_zero(c0)) throw EngineError("class with zero constant term is not invertible");
  const Coeff c0_inv = Coeff(1) / c0;
  // a = c0 (1 + n), a^{-1} = c0^{-1} sum_k (-n)^k.
  BasicClass<Coeff> n = a * c0_inv - BasicClass<Coeff>::constant(a.model(), Coeff(1));
  BasicClass<Coeff> minus_n = -n;
  BasicClass<Coeff> result = BasicClass<Coeff>::constant(a.model(), Coeff(1));
  BasicClass<Coeff> power = result;
  while (true) {
    power = power * minus_n;
    if (power.is_zero()) break;
    result += power;
  }
  return result * c0_inv;
}

/// Coefficient of the fundamental monomial times the orientation value.
template <class Coeff>
Coeff integrate(const BasicClass<Coeff>& a) {
  return a.coefficient(a.model()->fundamental()) * Coeff(a.model()->orientation());
}

/// Power a^k, k >= 0.
template <class Coeff>
BasicClass<Coeff> pow(const BasicClass<Coeff>& a, int k) {
  BasicClass<Coeff> r = BasicClass<Coeff>::constant(a.model(), Coeff(1));
  for (int i = 0; i < k && !r.is_zero(); ++i) r = r * a;
  return r;
}

}  // namespace projindex
