#include "projindex/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace projindex {

namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  QPoly divisor = b;
  trim(divisor);
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  QPoly rem = a;
  trim(rem);
  if (rem.size() < divisor.size()) return {QPoly{}, rem};
  QPoly quot(rem.size() - divisor.size() + 1);
  const Rational lead_inv = divisor.back().inverse();
  for (std::size_t k = rem.size(); k-- >= divisor.size();) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] * lead_inv;
    const std::size_t shift = k - (divisor.size() - 1);
    quot[shift] = q;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[shift + j] -= q * divisor[j];
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

}  // namespace qpoly

namespace {

QPoly compute_cyclotomic(int n) {
  // t^n - 1
  QPoly p(static_cast<std::size_t>(n) + 1);
  p[0] = Rational(-1);
  p[static_cast<std::size_t>(n)] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = qpoly::divmod(p, cyclotomic_polynomial(d));
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  return p;
}

QPoly reduce_mod(const QPoly& a, int order) {
  QPoly r = qpoly::divmod(a, cyclotomic_polynomial(order)).second;
  r.resize(static_cast<std::size_t>(euler_phi(order)));
  return r;
}

}  // namespace

const QPoly& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Computed outside the lock since it recurses on proper divisors.
  QPoly p = compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}

Cyclotomic::Cyclotomic(int order, QPoly coefficients) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_ = reduce_mod(coefficients, order);
}

Cyclotomic Cyclotomic::root_of_unity(int order, std::int64_t power) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::int64_t k = power % order;
  if (k < 0) k += order;
  QPoly p(static_cast<std::size_t>(k) + 1);
  p[static_cast<std::size_t>(k)] = Rational(1);
  return Cyclotomic(order, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_.front();
}

Cyclotomic Cyclotomic::lift(int new_order) const {
  if (new_order % order_ != 0)
    throw std::invalid_argument("cannot lift Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(new_order) + ")");
  if (new_order == order_) return *this;
  const std::size_t stride = static_cast<std::size_t>(new_order / order_);
  QPoly p(coeffs_.size() * stride);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * stride] = coeffs_[i];
  return Cyclotomic(new_order, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  // Extended Euclid: track s with s*a == r (mod Phi_N).
  QPoly r0 = cyclotomic_polynomial(order_);
  QPoly r1 = coeffs_;
  qpoly::trim(r1);
  QPoly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = qpoly::divmod(r0, r1);
    QPoly s = qpoly::sub(s0, qpoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  const Rational c = r1.front().inverse();
  for (auto& x : s1) x *= c;
  return Cyclotomic(order_, std::move(s1));
}

namespace {

int lcm_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const int l = lcm_order(order_, o.order_);
    *this = lift(l);
    return *this += o.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const int l = lcm_order(order_, o.order_);
    *this = lift(l);
    return *this *= o.lift(l);
  }
  if (order_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  coeffs_ = reduce_mod(qpoly::mul(coeffs_, o.coeffs_), order_);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int l = std::lcm(a.order_, b.order_);
  return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (auto r = to_rational()) return r->to_string();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "z" << order_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace projindex
