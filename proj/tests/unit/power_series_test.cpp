#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projindex/power_series.hpp"

using projindex::GenusKind;
using projindex::PowerSeries;
using projindex::Rational;

namespace {

PowerSeries random_series(std::mt19937_64& rng, int order, bool zero_constant = false) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(k == 0 && zero_constant ? Rational(0) : oracle::random_rational(rng));
  return PowerSeries("x", order, c);
}

}  // namespace

TEST(Bernoulli, MatchesRecurrence) {
  const auto expected = oracle::bernoulli_numbers(30);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(projindex::bernoulli(n), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(projindex::bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(projindex::bernoulli(2), Rational(1, 6));
  EXPECT_EQ(projindex::bernoulli(12), Rational(-691, 2730));
  for (int n = 3; n <= 29; n += 2) EXPECT_TRUE(projindex::bernoulli(n).is_zero());
}

TEST(GenusSeries, MatchSeriesDivision) {
  for (int order : {0, 1, 4, 12, 20}) {
    const auto todd = oracle::todd_series(order);
    const auto ahat = oracle::a_hat_series(order);
    const PowerSeries t = projindex::genus_series(GenusKind::todd, order);
    const PowerSeries a = projindex::genus_series(GenusKind::a_hat, order);
    for (int k = 0; k <= order; ++k) {
      EXPECT_EQ(t[k], todd[static_cast<std::size_t>(k)]) << "todd x^" << k;
      EXPECT_EQ(a[k], ahat[static_cast<std::size_t>(k)]) << "a_hat x^" << k;
    }
  }
}

TEST(GenusSeries, LeadingCoefficients) {
  const PowerSeries a = projindex::genus_series(GenusKind::a_hat, 4);
  EXPECT_EQ(a.coefficients(), (std::vector<Rational>{1, 0, Rational(-1, 24), 0, Rational(7, 5760)}));
  const PowerSeries t = projindex::genus_series(GenusKind::todd, 4);
  EXPECT_EQ(t.coefficients(), (std::vector<Rational>{1, Rational(1, 2), Rational(1, 12), 0, Rational(-1, 720)}));
}

TEST(GenusSeries, AHatIsEven) {
  const PowerSeries a = projindex::genus_series(GenusKind::a_hat, 21);
  for (int k = 1; k <= 21; k += 2) EXPECT_TRUE(a[k].is_zero()) << k;
}

TEST(GenusSeries, ToddRelatesToAHat) {
  // x/(1-e^{-x}) = e^{x/2} (x/2)/sinh(x/2)
  const int n = 14;
  const PowerSeries lhs = projindex::genus_series(GenusKind::todd, n);
  const PowerSeries rhs = PowerSeries("x", n, oracle::exp_linear(Rational(1, 2), n)) * projindex::genus_series(GenusKind::a_hat, n);
  EXPECT_EQ(lhs, rhs);
}

TEST(PowerSeries, MultiplicationMatchesConvolution) {
  std::mt19937_64 rng(5);
  for (int order = 0; order <= 12; ++order) {
    const PowerSeries f = random_series(rng, order), g = random_series(rng, order);
    const auto expected = oracle::mul(f.coefficients(), g.coefficients(), order);
    EXPECT_EQ((f * g).coefficients(), expected);
  }
}

TEST(PowerSeries, CompositionMatchesTermwiseSum) {
  std::mt19937_64 rng(6);
  for (int order = 0; order <= 12; ++order) {
    const PowerSeries f = random_series(rng, order), g = random_series(rng, order, true);
    EXPECT_EQ(f.compose(g).coefficients(), oracle::compose(f.coefficients(), g.coefficients(), order));
  }
}

TEST(PowerSeries, TruncatesToSmallerOrder) {
  const PowerSeries f("x", 3, {1, 1, 1, 1});
  const PowerSeries g("x", 5, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ((f * g).order(), 3);
  EXPECT_EQ((f + g).order(), 3);
  EXPECT_EQ((f + g)[3], Rational(5));
  EXPECT_EQ(f[7], Rational(0));
}

TEST(PowerSeries, ReciprocalLogExp) {
  std::mt19937_64 rng(8);
  for (int order = 1; order <= 10; ++order) {
    PowerSeries f = random_series(rng, order);
    std::vector<Rational> c = f.coefficients();
    c[0] = Rational(1);
    f = PowerSeries("x", order, c);
    EXPECT_EQ(f * f.reciprocal(), PowerSeries::constant("x", order, Rational(1)));
    EXPECT_EQ(f.log().exp(), f);
    const PowerSeries g = random_series(rng, order, true);
    EXPECT_EQ(g.exp().log(), g);
  }
}

TEST(PowerSeries, ExpOfScaledIdentity) {
  const PowerSeries e = PowerSeries::identity("x", 8).scaled(Rational(3)).exp();
  EXPECT_EQ(e.coefficients(), oracle::exp_linear(Rational(3), 8));
}

TEST(PowerSeries, RejectsInvalidOperands) {
  EXPECT_THROW(PowerSeries("x", 3, {0, 1}).reciprocal(), std::domain_error);
  EXPECT_THROW(PowerSeries("x", 3, {2, 1}).log(), std::domain_error);
  EXPECT_THROW(PowerSeries("x", 3, {1, 1}).exp(), std::domain_error);
  EXPECT_THROW(PowerSeries("x", 3, {1, 1}).compose(PowerSeries("x", 3, {1, 1})), std::domain_error);
}

TEST(PowerSeries, Rendering) {
  EXPECT_EQ(projindex::genus_series(GenusKind::a_hat, 4).to_string(), "1 - 1/24*x^2 + 7/5760*x^4 + O(x^5)");
}
