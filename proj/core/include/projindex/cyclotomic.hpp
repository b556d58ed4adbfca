#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "projindex/rational.hpp"

namespace projindex {

/// Dense univariate polynomial over Q, index = degree. Trailing zeros trimmed.
using QPoly = std::vector<Rational>;

/// The n-th cyclotomic polynomial, obtained by dividing t^n - 1 by Phi_d for
/// every proper divisor d of n. Results are memoized process-wide.
const QPoly& cyclotomic_polynomial(int n);

/// Euler's totient, i.e. deg Phi_n.
int euler_phi(int n);

/// An element of Q(zeta_N) stored as a residue modulo Phi_N in the power
/// basis 1, zeta, ..., zeta^{phi(N)-1}. Order 1 is the rational subfield.
///
/// Mixed-order arithmetic lifts both operands to the lcm of their orders.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::int64_t n) : Cyclotomic(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  /// Takes an arbitrary polynomial in zeta_N and reduces it mod Phi_N.
  Cyclotomic(int order, QPoly coefficients);

  /// zeta_order^power, power taken mod order.
  static Cyclotomic root_of_unity(int order, std::int64_t power);

  int order() const { return order_; }
  /// Always exactly phi(order) entries.
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> to_rational() const;

  /// Re-expresses the element in Q(zeta_new_order); requires order() | new_order.
  Cyclotomic lift(int new_order) const;

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable form such as "1/2 - 3*z4"; rational elements print as "p/q".
  std::string to_string() const;

 private:
  int order_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

namespace qpoly {

void trim(QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

}  // namespace qpoly

}  // namespace projindex
