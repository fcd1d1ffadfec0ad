#pragma once

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers, Bernoulli polynomials and power sums.
 *
 * Convention: t/(e^t - 1) = sum_k B_k t^k / k!, hence B_1 = -1/2. The
 * "B_1 = +1/2" convention is never used anywhere in this library; power-sum
 * formulas below are written for the minus sign.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/binomial.hpp"
#include "skein/polynomial.hpp"
#include "skein/rational.hpp"
#include "skein/series.hpp"

namespace skein {

class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t max_index() const { return values_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return values_.at(k); }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// B_0..B_n from the exact inverse of (e^t - 1)/t.
inline BernoulliTable bernoulli_numbers(std::size_t n) {
  const RationalSeries gen = series_inverse(expm1_over_t_series(n));
  std::vector<Rational> values(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    values[k] = gen.coefficient_at(k) * factorial(static_cast<unsigned>(k));
  return BernoulliTable(std::move(values));
}

inline Rational bernoulli_number(std::size_t k) { return bernoulli_numbers(k)[k]; }

/// B_m(x) = sum_l binom(m, l) x^{m-l} B_l.
inline UnivariatePolynomial bernoulli_polynomial(std::size_t m, const BernoulliTable& table) {
  if (table.max_index() < m) throw std::invalid_argument("bernoulli_polynomial: table too short");
  std::vector<Rational> cs(m + 1);
  for (std::size_t l = 0; l <= m; ++l) cs[m - l] = binomial(m, l) * table[l];
  return UnivariatePolynomial(std::move(cs));
}

inline UnivariatePolynomial bernoulli_polynomial(std::size_t m) {
  return bernoulli_polynomial(m, bernoulli_numbers(m));
}

/// B_m(1/2), by evaluating the polynomial (not via the closed form).
inline Rational bernoulli_half_value(std::size_t m) {
  return bernoulli_polynomial(m)(Rational(1, 2));
}

class FaulhaberMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * sum_{y=1}^{N} y^m as a polynomial in N, m >= 1.
 *
 * Computed twice: from the Bernoulli-number expansion
 *   N^m/2 + N^{m+1}/(m+1) * sum_{j<=m/2} binom(m+1, 2j) B_{2j} N^{-2j}
 * and from (B_{m+1}(N+1) - B_{m+1})/(m+1). Throws FaulhaberMismatch if the two
 * routes disagree.
 */
inline UnivariatePolynomial faulhaber_poly(std::size_t m) {
  if (m < 1) throw std::invalid_argument("faulhaber_poly: exponent must be >= 1");
  const BernoulliTable table = bernoulli_numbers(m + 1);

  UnivariatePolynomial expansion = UnivariatePolynomial::monomial(Rational(1, 2), m);
  const Rational scale = Rational(static_cast<unsigned long>(m + 1)).inverse();
  for (std::size_t j = 0; 2 * j <= m; ++j)
    expansion += UnivariatePolynomial::monomial(scale * binomial(m + 1, 2 * j) * table[2 * j],
                                                m + 1 - 2 * j);

  const UnivariatePolynomial bm1 = bernoulli_polynomial(m + 1, table);
  const UnivariatePolynomial shifted = bm1.compose(UnivariatePolynomial{1, 1});
  const UnivariatePolynomial via_polynomial =
      scale * (shifted - UnivariatePolynomial::constant(table[m + 1]));

  if (!(expansion == via_polynomial))
    throw FaulhaberMismatch("faulhaber_poly: expansions disagree for m = " + std::to_string(m) +
                            ": " + expansion.str("N") + " vs " + via_polynomial.str("N"));
  return expansion;
}

}  // namespace skein
