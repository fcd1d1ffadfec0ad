#pragma once

/**
 * @file quantum.hpp
 * @brief Quantum integers, bracket values of the e-basis, the surgery
 *        element and the normalization D^2, all exact in Q(zeta_2p).
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "skein/cyclotomic.hpp"
#include "skein/rational.hpp"

namespace skein {

/// [n] = (A^{2n} - A^{-2n})/(A^2 - A^{-2}) = sum_{k=0}^{n-1} A^{2n-2-4k} for n > 0.
inline LaurentPolynomial quantum_integer_laurent(long n) {
  if (n < 0) return -quantum_integer_laurent(-n);
  LaurentPolynomial r;
  for (long k = 0; k < n; ++k) r = r + LaurentPolynomial::monomial(1, 2 * n - 2 - 4 * k);
  return r;
}

inline CyclotomicElement quantum_integer(long n, const CyclotomicField& field) {
  return quantum_integer_laurent(n).specialize(field);
}

/// A^k - A^{-k}.
inline CyclotomicElement generator_difference(long k, const CyclotomicField& field) {
  return field.power_of_generator(k) - field.power_of_generator(-k);
}

/// <e_i> = (-1)^i [i + 1].
inline CyclotomicElement bracket_e(int i, const CyclotomicField& field) {
  if (i < 0) throw std::invalid_argument("bracket_e: color must be >= 0");
  const CyclotomicElement q = quantum_integer(i + 1, field);
  return i % 2 == 0 ? q : -q;
}

/// (<e_0>, ..., <e_{d-1}>): the coefficients of the surgery element in the e-basis.
inline std::vector<CyclotomicElement> omega_coefficients(const CyclotomicField& field) {
  std::vector<CyclotomicElement> out;
  for (int i = 0; i < field.d(); ++i) out.push_back(bracket_e(i, field));
  return out;
}

inline std::vector<CyclotomicElement> omega_coefficients(int p) {
  return omega_coefficients(CyclotomicField(p));
}

/// D^2 = -p/(A^2 - A^{-2})^2. D itself is never needed.
inline CyclotomicElement d_squared(const CyclotomicField& field) {
  const CyclotomicElement delta = generator_difference(2, field);
  return Rational(-field.p()) * (delta * delta).inverse();
}

struct FlatCheck {
  CyclotomicElement lhs;  ///< (-p/(A - A^{-1})^2)^{g-1}
  CyclotomicElement rhs;  ///< (D^2/<e_{d-1}>^2)^{g-1}
  bool equal;
};

/// Invariant of a flat non-separating curve in Sigma_g x S^1, by two closed forms.
inline FlatCheck lemma_flat_check(int g, const CyclotomicField& field) {
  if (g < 1) throw std::invalid_argument("lemma_flat_check: genus must be >= 1");
  const CyclotomicElement delta1 = generator_difference(1, field);
  const CyclotomicElement base_lhs = Rational(-field.p()) * (delta1 * delta1).inverse();
  const CyclotomicElement top = bracket_e(field.d() - 1, field);
  const CyclotomicElement base_rhs = d_squared(field) * (top * top).inverse();
  FlatCheck out{base_lhs.pow(g - 1), base_rhs.pow(g - 1), false};
  out.equal = out.lhs == out.rhs;
  return out;
}

/// <e_{2s-1}> == <e_{p-2s-1}> for 1 <= s <= d.
inline bool recoloring_check(int s, const CyclotomicField& field) {
  if (s < 1 || s > field.d())
    throw std::invalid_argument("recoloring_check: s must lie in 1..d, got " + std::to_string(s));
  return bracket_e(2 * s - 1, field) == bracket_e(field.p() - 2 * s - 1, field);
}

}  // namespace skein
