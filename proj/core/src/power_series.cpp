#include "projindex/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace projindex {

PowerSeries::PowerSeries(std::string variable, int order)
    : variable_(std::move(variable)), order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw std::invalid_argument("power series order must be nonnegative");
}

PowerSeries::PowerSeries(std::string variable, int order, std::vector<Rational> coefficients)
    : PowerSeries(std::move(variable), order) {
  const std::size_t n = std::min(coefficients.size(), coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coefficients[i]);
}

PowerSeries PowerSeries::constant(std::string variable, int order, const Rational& c) {
  PowerSeries s(std::move(variable), order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::identity(std::string variable, int order) {
  PowerSeries s(std::move(variable), order);
  if (order >= 1) s.coeffs_[1] = Rational(1);
  return s;
}

Rational PowerSeries::operator[](int k) const {
  if (k < 0 || k > order_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries PowerSeries::truncated(int order) const {
  return PowerSeries(variable_, std::min(order, order_), coeffs_);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
  const int n = std::min(order_, o.order_);
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      r[static_cast<std::size_t>(i + j)] += coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
  }
  order_ = n;
  coeffs_ = std::move(r);
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0].is_zero()) throw std::domain_error("reciprocal of a series with zero constant term");
  PowerSeries r(variable_, order_);
  const Rational inv0 = coeffs_[0].inverse();
  r.coeffs_[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += coeffs_[static_cast<std::size_t>(k)] * r.coeffs_[static_cast<std::size_t>(n - k)];
    r.coeffs_[static_cast<std::size_t>(n)] = -acc * inv0;
  }
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (!inner[0].is_zero()) throw std::domain_error("composition requires an inner series without constant term");
  const int n = std::min(order_, inner.order_);
  // Horner: c_0 + g (c_1 + g (c_2 + ...)).
  PowerSeries acc = PowerSeries::constant(variable_, n, (*this)[n]);
  const PowerSeries g = inner.truncated(n);
  for (int k = n - 1; k >= 0; --k) {
    acc *= g;
    acc.coeffs_[0] += coeffs_[static_cast<std::size_t>(k)];
  }
  acc.variable_ = inner.variable_;
  return acc;
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != Rational(1)) throw std::domain_error("log requires constant term 1");
  // (log f)' = f'/f.
  PowerSeries deriv(variable_, order_);
  for (int k = 1; k <= order_; ++k)
    deriv.coeffs_[static_cast<std::size_t>(k - 1)] = coeffs_[static_cast<std::size_t>(k)] * Rational(k);
  PowerSeries q = deriv * reciprocal();
  PowerSeries r(variable_, order_);
  for (int k = 1; k <= order_; ++k)
    r.coeffs_[static_cast<std::size_t>(k)] = q[k - 1] / Rational(k);
  return r;
}

PowerSeries PowerSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("exp requires zero constant term");
  // n g_n = sum_{k=1}^n k f_k g_{n-k}.
  PowerSeries g(variable_, order_);
  g.coeffs_[0] = Rational(1);
  for (int n = 1; n <= order_; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k)
      acc += Rational(k) * coeffs_[static_cast<std::size_t>(k)] * g.coeffs_[static_cast<std::size_t>(n - k)];
    g.coeffs_[static_cast<std::size_t>(n)] = acc / Rational(n);
  }
  return g;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
  PowerSeries r = *this;
  Rational p(1);
  for (auto& x : r.coeffs_) {
    x *= p;
    p *= c;
  }
  return r;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (k == 0 || mag != Rational(1)) os << mag;
    if (k > 0) {
      if (mag != Rational(1)) os << "*";
      os << variable_;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(" << variable_ << "^" << order_ + 1 << ")";
  return os.str();
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
  // Akiyama–Tanigawa; yields B_1 = +1/2, flipped below.
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<std::size_t>(j - 1)] =
          Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
  }
  return n == 1 ? -a[0] : a[0];
}

PowerSeries genus_series(GenusKind kind, int order, std::string variable) {
  PowerSeries s(std::move(variable), order);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  switch (kind) {
    case GenusKind::a_hat: {
      // (x/2)/sinh(x/2) = sum_k (2 - 2^{2k}) B_{2k} x^{2k} / (2^{2k} (2k)!)
      Rational four_k(1);
      for (int k = 0; 2 * k <= order; ++k) {
        c[static_cast<std::size_t>(2 * k)] = (Rational(2) - four_k) * bernoulli(2 * k) / (four_k * factorial(2 * k));
        four_k *= Rational(4);
      }
      break;
    }
    case GenusKind::todd:
      // x/(1 - e^{-x}) = sum_n (-1)^n B_n x^n / n!
      for (int n = 0; n <= order; ++n) {
        Rational term = bernoulli(n) / factorial(n);
        c[static_cast<std::size_t>(n)] = n % 2 ? -term : term;
      }
      break;
  }
  return PowerSeries(s.variable(), order, std::move(c));
}

}  // namespace projindex
