#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace projindex {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP so no intermediate ever overflows.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk or q == 0.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  Rational inverse() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact rational.
Rational factorial(int n);

/// Binomial coefficient C(n, k) for 0 <= k <= n; zero otherwise.
Rational binomial(int n, int k);

}  // namespace projindex
