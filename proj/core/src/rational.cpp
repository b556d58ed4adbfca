#include "projindex/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace projindex {

Rational::Rational(std::int64_t n) : v_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (char c : digits)
      if (c < '0' || c > '9') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string str(s);
    if (str.front() == '+') str.erase(0, 1);
    return mpz_class(str, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_int(text)));
  mpz_class num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class den = parse_int(den_text);
  if (den == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(c));
}

}  // namespace projindex
