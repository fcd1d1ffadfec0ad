#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(zeta_2p) for odd p >= 3.
 *
 * Elements are residues of Q[x] modulo the 2p-th cyclotomic polynomial, with
 * x standing for the variable A (a primitive 2p-th root of unity). The
 * residue of degree < phi(2p) is the canonical representative, so equality is
 * coefficient-wise.
 */

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/polynomial.hpp"
#include "skein/rational.hpp"

namespace skein {

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by Phi_d for d | n, d < n.
inline UnivariatePolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  UnivariatePolynomial poly = UnivariatePolynomial::monomial(1, static_cast<std::size_t>(n)) -
                              UnivariatePolynomial::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly.divmod(cyclotomic_polynomial(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    poly = std::move(q);
  }
  return poly;
}

class CyclotomicElement;

class CyclotomicField {
 public:
  explicit CyclotomicField(int p) {
    if (p < 3 || p % 2 == 0)
      throw std::invalid_argument("CyclotomicField: p must be odd and >= 3, got " + std::to_string(p));
    auto data = std::make_shared<Data>();
    data->p = p;
    data->modulus = cyclotomic_polynomial(2 * p);
    data_ = std::move(data);
  }

  int p() const { return data_->p; }
  /// d = (p - 1)/2.
  int d() const { return (data_->p - 1) / 2; }
  const UnivariatePolynomial& modulus() const { return data_->modulus; }
  /// phi(2p), the dimension over Q.
  int degree() const { return *data_->modulus.degree(); }

  CyclotomicElement zero() const;
  CyclotomicElement one() const;
  CyclotomicElement constant(const Rational& c) const;
  /// The generator A.
  CyclotomicElement generator() const;
  /// A^k for any integer k (reduced mod 2p first).
  CyclotomicElement power_of_generator(long k) const;
  CyclotomicElement from_polynomial(const UnivariatePolynomial& poly) const;

  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) {
    return a.p() == b.p();
  }

 private:
  struct Data {
    int p = 0;
    UnivariatePolynomial modulus;
  };
  std::shared_ptr<const Data> data_;
};

class CyclotomicElement {
 public:
  CyclotomicElement(CyclotomicField field, const UnivariatePolynomial& poly)
      : field_(std::move(field)), residue_(poly.divmod(field_.modulus()).second) {}

  const CyclotomicField& field() const { return field_; }
  /// Canonical residue; coefficient k multiplies A^k.
  const UnivariatePolynomial& residue() const { return residue_; }
  std::vector<Rational> coefficients() const {
    std::vector<Rational> cs(static_cast<std::size_t>(field_.degree()));
    for (std::size_t k = 0; k < residue_.coeffs().size(); ++k) cs[k] = residue_.coeffs()[k];
    return cs;
  }

  bool is_zero() const { return residue_.is_zero(); }

  /// True when the element lies in Q, i.e. its residue is constant.
  bool is_rational() const { return residue_.degree() <= Degree(0); }

  CyclotomicElement operator-() const { return {field_, -residue_}; }

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_field(b);
    return {a.field_, a.residue_ + b.residue_};
  }
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_field(b);
    return {a.field_, a.residue_ - b.residue_};
  }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_field(b);
    return {a.field_, a.residue_ * b.residue_};
  }
  friend CyclotomicElement operator*(const Rational& s, const CyclotomicElement& a) {
    return {a.field_, s * a.residue_};
  }
  friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a * b.inverse();
  }

  /// Inverse by the extended Euclidean algorithm against the modulus.
  CyclotomicElement inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicElement: inverse of zero");
    UnivariatePolynomial r0 = field_.modulus(), r1 = residue_;
    UnivariatePolynomial s0, s1 = UnivariatePolynomial::constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = r0.divmod(r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UnivariatePolynomial next = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(next);
    }
    if (r0.degree() != Degree(0))
      throw std::logic_error("CyclotomicElement: modulus not coprime to element");
    return {field_, r0.leading().inverse() * s0};
  }

  CyclotomicElement pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicElement result = field_.one(), base = *this;
    while (e != 0) {
      if (e & 1L) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Image under A -> exp(i*pi*k/p); k must be coprime to 2p for a field embedding.
  std::complex<double> embed(int k) const {
    const double angle = std::numbers::pi * k / field_.p();
    const std::complex<double> a = std::polar(1.0, angle);
    std::complex<double> acc = 0.0;
    for (auto it = residue_.coeffs().rbegin(); it != residue_.coeffs().rend(); ++it)
      acc = acc * a + it->to_double();
    return acc;
  }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.field_ == b.field_ && a.residue_ == b.residue_;
  }

  /// e.g. "1 - A + 2*A^3".
  std::string str() const { return residue_.str("A"); }

 private:
  void check_field(const CyclotomicElement& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("CyclotomicElement: field mismatch");
  }

  CyclotomicField field_;
  UnivariatePolynomial residue_;
};

inline CyclotomicElement CyclotomicField::zero() const { return {*this, UnivariatePolynomial{}}; }
inline CyclotomicElement CyclotomicField::one() const { return constant(1); }
inline CyclotomicElement CyclotomicField::constant(const Rational& c) const {
  return {*this, UnivariatePolynomial::constant(c)};
}
inline CyclotomicElement CyclotomicField::generator() const { return power_of_generator(1); }
inline CyclotomicElement CyclotomicField::power_of_generator(long k) const {
  const long n = 2L * p();
  const long e = ((k % n) + n) % n;
  return {*this, UnivariatePolynomial::monomial(1, static_cast<std::size_t>(e))};
}
inline CyclotomicElement CyclotomicField::from_polynomial(const UnivariatePolynomial& poly) const {
  return {*this, poly};
}

inline CyclotomicField cyclotomic_field(int p) { return CyclotomicField(p); }

/**
 * Integer Laurent polynomial in A. Used to state identities generically
 * before specializing A to a root of unity.
 */
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(const Integer& c, long e) {
    LaurentPolynomial r;
    r.add(e, c);
    return r;
  }

  const std::map<long, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, Integer(ca * cb));
    return r;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  CyclotomicElement specialize(const CyclotomicField& field) const {
    CyclotomicElement acc = field.zero();
    for (const auto& [e, c] : terms_) acc = acc + Rational(c) * field.power_of_generator(e);
    return acc;
  }

 private:
  void add(long e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<long, Integer> terms_;
};

}  // namespace skein
