#include <gtest/gtest.h>

#include "skein/bernoulli.hpp"
#include "skein/binomial.hpp"

using namespace skein;

TEST(Bernoulli, Numbers) {
  const BernoulliTable t = bernoulli_numbers(12);
  EXPECT_EQ(t[0], Rational(1));
  EXPECT_EQ(t[1], Rational(-1, 2));
  EXPECT_EQ(t[2], Rational(1, 6));
  EXPECT_EQ(t[3], Rational(0));
  EXPECT_EQ(t[4], Rational(-1, 30));
  EXPECT_EQ(t[6], Rational(1, 42));
  EXPECT_EQ(t[12], Rational(-691, 2730));
  EXPECT_EQ(bernoulli_number(10), Rational(5, 66));
}

TEST(Bernoulli, RecurrenceOracle) {
  // sum_{k=0}^{n-1} binom(n, k) B_k = 0 for n >= 2, independent of the series inversion.
  const BernoulliTable t = bernoulli_numbers(30);
  for (unsigned n = 2; n <= 31; ++n) {
    Rational acc = 0;
    for (unsigned k = 0; k < n; ++k) acc += binomial(n, k) * t[k];
    EXPECT_TRUE(acc.is_zero()) << "n = " << n;
  }
}

TEST(Bernoulli, Polynomials) {
  EXPECT_EQ(bernoulli_polynomial(0), UnivariatePolynomial{1});
  EXPECT_EQ(bernoulli_polynomial(1), (UnivariatePolynomial{Rational(-1, 2), 1}));
  EXPECT_EQ(bernoulli_polynomial(2), (UnivariatePolynomial{Rational(1, 6), -1, 1}));
  // B_m(x + 1) - B_m(x) = m x^{m-1}.
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto b = bernoulli_polynomial(m);
    EXPECT_EQ(b.compose(UnivariatePolynomial{1, 1}) - b,
              UnivariatePolynomial::monomial(Rational(static_cast<unsigned long>(m)), m - 1));
  }
}

TEST(Bernoulli, HalfValues) {
  EXPECT_EQ(bernoulli_half_value(2), Rational(-1, 12));
  EXPECT_EQ(bernoulli_half_value(1), Rational(0));
  EXPECT_EQ(bernoulli_half_value(0), Rational(1));
  for (std::size_t m = 0; m <= 40; ++m)
    EXPECT_EQ(bernoulli_half_value(m),
              (Rational(2).pow(1 - static_cast<long>(m)) - 1) * bernoulli_number(m))
        << "m = " << m;
}

TEST(Bernoulli, Faulhaber) {
  const auto N = UnivariatePolynomial::x();
  EXPECT_EQ(faulhaber_poly(1), Rational(1, 2) * (N * (N + UnivariatePolynomial{1})));
  EXPECT_EQ(faulhaber_poly(2)(Rational(3)), Rational(14));
  EXPECT_EQ(faulhaber_poly(3)(Rational(2)), Rational(9));
  for (std::size_t m = 1; m <= 20; ++m) {
    const auto f = faulhaber_poly(m);
    Rational brute = 0;
    for (long n = 1; n <= 50; ++n) {
      brute += Rational(n).pow(static_cast<long>(m));
      ASSERT_EQ(f(Rational(n)), brute) << "m = " << m << ", N = " << n;
    }
  }
  EXPECT_THROW(faulhaber_poly(0), std::invalid_argument);
}

TEST(Bernoulli, ShiftedParityInP) {
  // B_{2b}((p+1)/2) is even and B_{2b+1}((p+1)/2) is odd as polynomials in p.
  const UnivariatePolynomial half_shift{Rational(1, 2), Rational(1, 2)};
  for (std::size_t b = 0; b <= 8; ++b) {
    EXPECT_TRUE(bernoulli_polynomial(2 * b).compose(half_shift).is_even()) << "b = " << b;
    EXPECT_TRUE(bernoulli_polynomial(2 * b + 1).compose(half_shift).is_odd()) << "b = " << b;
  }
}
