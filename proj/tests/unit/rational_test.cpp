#include <random>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projindex/rational.hpp"

using projindex::Rational;
using boost::multiprecision::cpp_rational;

namespace {

cpp_rational to_boost(const Rational& r) { return cpp_rational(r.to_string()); }

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_EQ(Rational(10, 5).denominator(), "1");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(-3, 9).sign(), -1);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "1/2", "-5/12", "123456789012345678901234567891/1000"})
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
  EXPECT_EQ(Rational::parse("+3").to_string(), "3");
}

TEST(Rational, ParseRejectsJunk) {
  for (const char* s : {"", "1/0", "x", "1.5", "1/2/3", "--1", "1 /2", "-4/-6"}) EXPECT_THROW(Rational::parse(s), std::invalid_argument) << s;
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, NoOverflowInProducts) {
  Rational r(1);
  cpp_rational expected(1);
  for (int i = 0; i < 40; ++i) {
    r *= Rational(std::int64_t{1} << 40, 3);
    expected *= cpp_rational(std::int64_t{1} << 40, 3);
  }
  EXPECT_EQ(to_boost(r), expected);
}

TEST(Rational, FieldAxiomsAgainstBoost) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = oracle::random_rational(rng, 1000), b = oracle::random_rational(rng, 1000),
                   c = oracle::random_rational(rng, 1000);
    EXPECT_EQ(to_boost(a + b), to_boost(a) + to_boost(b));
    EXPECT_EQ(to_boost(a * b), to_boost(a) * to_boost(b));
    EXPECT_EQ(to_boost(a - b), to_boost(a) - to_boost(b));
    if (!b.is_zero()) {
      EXPECT_EQ(to_boost(a / b), to_boost(a) / to_boost(b));
      EXPECT_EQ(b * b.inverse(), Rational(1));
    }
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + Rational(0), a);
    EXPECT_EQ(a + (-a), Rational(0));
    EXPECT_EQ(a < b, to_boost(a) < to_boost(b));
  }
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(projindex::factorial(0), Rational(1));
  EXPECT_EQ(projindex::factorial(10), Rational(3628800));
  for (int n = 0; n <= 20; ++n)
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(projindex::binomial(n, k), oracle::choose(n, k));
}
