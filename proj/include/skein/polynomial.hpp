#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * coeffs()[k] is the coefficient of x^k. Trailing zeros are always stripped,
 * so the zero polynomial has an empty coefficient vector and its degree is
 * the "minus infinity" sentinel (an empty Degree).
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

/// Polynomial degree. An empty value stands for deg(0) = -infinity and
/// compares below every actual degree.
using Degree = std::optional<int>;

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  UnivariatePolynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
  explicit UnivariatePolynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }
  explicit UnivariatePolynomial(const Rational& c) : coeffs_{c} { normalize(); }

  static UnivariatePolynomial constant(const Rational& c) { return UnivariatePolynomial(c); }

  static UnivariatePolynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> cs(k + 1);
    cs[k] = c;
    return UnivariatePolynomial(std::move(cs));
  }

  /// The identity polynomial x.
  static UnivariatePolynomial x() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Degree degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }

  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  /// Horner evaluation in any ring T that accepts Rational scalars.
  template <class T>
  T evaluate(const T& x) const {
    T acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Rational operator()(const Rational& x) const { return evaluate<Rational>(x); }

  /// this(inner(x)).
  UnivariatePolynomial compose(const UnivariatePolynomial& inner) const {
    UnivariatePolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * inner + constant(*it);
    return acc;
  }

  bool is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
      if (!coeffs_[k].is_zero()) return false;
    return true;
  }

  bool is_odd() const {
    for (std::size_t k = 0; k < coeffs_.size(); k += 2)
      if (!coeffs_[k].is_zero()) return false;
    return true;
  }

  UnivariatePolynomial operator-() const {
    UnivariatePolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }

  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) { return *this += -o; }

  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivariatePolynomial(std::move(out));
  }

  friend UnivariatePolynomial operator*(const Rational& s, UnivariatePolynomial a) {
    for (auto& c : a.coeffs_) c *= s;
    a.normalize();
    return a;
  }

  UnivariatePolynomial pow(unsigned e) const {
    UnivariatePolynomial result = constant(1), base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Euclidean division; returns {quotient, remainder}.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(
      const UnivariatePolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UnivariatePolynomial: division by zero");
    std::vector<Rational> rem = coeffs_;
    const std::size_t dn = divisor.coeffs_.size();
    if (rem.size() < dn) return {UnivariatePolynomial{}, *this};
    std::vector<Rational> quot(rem.size() - dn + 1);
    const Rational lead_inv = divisor.leading().inverse();
    for (std::size_t k = rem.size(); k-- >= dn;) {
      const Rational q = rem[k] * lead_inv;
      quot[k - dn + 1] = q;
      if (q.is_zero()) continue;
      for (std::size_t i = 0; i < dn; ++i) rem[k - dn + 1 + i] -= q * divisor.coeffs_[i];
    }
    return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
  }

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// Ascending-degree rendering, e.g. "1/6 - x + x^2".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      const Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) os << '-';
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag;
        continue;
      }
      if (!mag.is_one()) os << mag << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace skein
