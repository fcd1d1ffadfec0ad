#pragma once

/**
 * @file annulus.hpp
 * @brief The skein algebra of the solid torus, Q[z], in the basis
 *        e_0 = 1, e_1 = z, e_{i+1} = z e_i - e_{i-1}.
 */

#include <cstddef>
#include <cstdlib>
#include <vector>

#include "skein/polynomial.hpp"
#include "skein/rational.hpp"

namespace skein {

/// e_i as a polynomial in z (monic of degree i).
inline UnivariatePolynomial e_basis_in_z(std::size_t i) {
  UnivariatePolynomial prev = UnivariatePolynomial::constant(1);
  if (i == 0) return prev;
  UnivariatePolynomial cur = UnivariatePolynomial::x();
  for (std::size_t k = 1; k < i; ++k) {
    UnivariatePolynomial next = UnivariatePolynomial::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// A finite combination sum_i a_i e_i.
class AnnulusSkein {
 public:
  AnnulusSkein() = default;
  explicit AnnulusSkein(std::vector<Rational> e_coefficients) : coeffs_(std::move(e_coefficients)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  static AnnulusSkein basis(std::size_t i) {
    std::vector<Rational> cs(i + 1);
    cs[i] = 1;
    return AnnulusSkein(std::move(cs));
  }

  const std::vector<Rational>& e_coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  UnivariatePolynomial to_z() const {
    UnivariatePolynomial acc;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) acc += coeffs_[i] * e_basis_in_z(i);
    return acc;
  }

  /// Inverse of to_z: peel off the top monic e_k repeatedly.
  static AnnulusSkein from_z(UnivariatePolynomial poly) {
    std::vector<Rational> cs;
    while (!poly.is_zero()) {
      const auto k = static_cast<std::size_t>(*poly.degree());
      if (cs.size() <= k) cs.resize(k + 1);
      const Rational lead = poly.leading();
      cs[k] = lead;
      poly -= lead * e_basis_in_z(k);
    }
    return AnnulusSkein(std::move(cs));
  }

  friend AnnulusSkein operator*(const AnnulusSkein& a, const AnnulusSkein& b) {
    return from_z(a.to_z() * b.to_z());
  }

  friend bool operator==(const AnnulusSkein&, const AnnulusSkein&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// e_i * e_j = e_{|i-j|} + e_{|i-j|+2} + ... + e_{i+j}.
inline AnnulusSkein e_product(std::size_t i, std::size_t j) {
  std::vector<Rational> cs(i + j + 1);
  const std::size_t lo = i > j ? i - j : j - i;
  for (std::size_t k = lo; k <= i + j; k += 2) cs[k] = 1;
  return AnnulusSkein(std::move(cs));
}

}  // namespace skein
