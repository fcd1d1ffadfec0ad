#pragma once

#include <stdexcept>

#include "skein/bivariate.hpp"
#include "skein/rational.hpp"
#include "skein/series.hpp"

namespace skein {

/// n choose k; zero when k > n.
inline Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

/**
 * binom(c + g - 1, 2g - 2) as a polynomial in c (second variable), i.e.
 * (c + g - 1)(c + g - 2)...(c - g + 2) / (2g - 2)!. Independent of p.
 */
inline BivariatePolynomial binomial_poly_in_c(int g) {
  if (g < 1) throw std::invalid_argument("binomial_poly_in_c: genus must be >= 1");
  const auto c = BivariatePolynomial::variable(1);
  BivariatePolynomial prod(1);
  for (int k = 0; k < 2 * g - 2; ++k) prod *= c + BivariatePolynomial(g - 1 - k);
  return factorial(static_cast<unsigned>(2 * g - 2)).inverse() * prod;
}

}  // namespace skein
