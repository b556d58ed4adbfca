#pragma once

#include <string>
#include <vector>

#include "projindex/rational.hpp"

namespace projindex {

/// Truncated one-variable power series c_0 + c_1 x + ... + c_order x^order.
/// Binary operations truncate to the smaller of the two orders.
class PowerSeries {
 public:
  PowerSeries(std::string variable, int order);
  PowerSeries(std::string variable, int order, std::vector<Rational> coefficients);

  static PowerSeries constant(std::string variable, int order, const Rational& c);
  /// The series for x itself.
  static PowerSeries identity(std::string variable, int order);

  const std::string& variable() const { return variable_; }
  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the truncation order.
  Rational operator[](int k) const;

  PowerSeries truncated(int order) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  /// 1/f; requires a nonzero constant term.
  PowerSeries reciprocal() const;
  /// f(g) for g with zero constant term.
  PowerSeries compose(const PowerSeries& inner) const;
  /// log f for f with constant term 1.
  PowerSeries log() const;
  /// exp f for f with zero constant term.
  PowerSeries exp() const;
  /// f(c x).
  PowerSeries scaled(const Rational& c) const;

  std::string to_string() const;

 private:
  std::string variable_;
  int order_;
  std::vector<Rational> coeffs_;
};

/// n-th Bernoulli number with B_1 = -1/2.
Rational bernoulli(int n);

enum class GenusKind { a_hat, todd };

/// One-root characteristic series: (x/2)/sinh(x/2) for a_hat, x/(1-e^{-x}) for todd.
PowerSeries genus_series(GenusKind kind, int order, std::string variable = "x");

}  // namespace projindex
