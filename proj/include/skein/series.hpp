#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in t over an exact coefficient ring.
 *
 * A series of order N stores the N + 1 coefficients of t^0 .. t^N, all of
 * which are exact. Binary operations require equal orders; the order is part
 * of the value so that reading past it is an error rather than a silent zero.
 *
 * Ring requirements: construction from Rational, +, -, *, ==.
 */

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/bivariate.hpp"
#include "skein/rational.hpp"

namespace skein {

template <class Ring>
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Ring(Rational(0))) {}

  TruncatedSeries(std::size_t order, std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1)
      throw std::invalid_argument("TruncatedSeries: more coefficients than the order allows");
    coeffs_.resize(order + 1, Ring(Rational(0)));
  }

  /// Builds sum_k term(k) t^k for k = 0..order.
  static TruncatedSeries generate(std::size_t order, const std::function<Ring(std::size_t)>& term) {
    std::vector<Ring> cs;
    cs.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) cs.push_back(term(k));
    return TruncatedSeries(order, std::move(cs));
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries r(order);
    r.coeffs_[0] = Ring(Rational(1));
    return r;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Ring>& coeffs() const { return coeffs_; }

  /// Coefficient of t^k. Throws when k exceeds the truncation order.
  const Ring& coefficient_at(std::size_t k) const {
    if (k > order())
      throw std::out_of_range("TruncatedSeries: coefficient t^" + std::to_string(k) +
                              " beyond truncation order " + std::to_string(order()));
    return coeffs_[k];
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  /// Cauchy product through the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    const std::size_t n = a.order();
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j)
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_order(const TruncatedSeries& o) const {
    if (o.order() != order())
      throw std::invalid_argument("TruncatedSeries: order mismatch (" + std::to_string(order()) +
                                  " vs " + std::to_string(o.order()) + ")");
  }

  std::vector<Ring> coeffs_;
};

template <class Ring>
TruncatedSeries<Ring> series_mul(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
  return a * b;
}

/// a^k by repeated squaring.
template <class Ring>
TruncatedSeries<Ring> series_pow(const TruncatedSeries<Ring>& a, unsigned k) {
  auto result = TruncatedSeries<Ring>::one(a.order());
  auto base = a;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

/// Multiplicative inverse of a series whose constant term is exactly 1.
template <class Ring>
TruncatedSeries<Ring> series_inverse(const TruncatedSeries<Ring>& s) {
  const Ring unit(Rational(1));
  if (!(s.coeffs()[0] == unit))
    throw std::invalid_argument("series_inverse: constant term must be exactly 1");
  const std::size_t n = s.order();
  std::vector<Ring> u(n + 1, Ring(Rational(0)));
  u[0] = unit;
  for (std::size_t k = 1; k <= n; ++k) {
    Ring acc(Rational(0));
    for (std::size_t i = 1; i <= k; ++i) acc = acc + s.coeffs()[i] * u[k - i];
    u[k] = Ring(Rational(0)) - acc;
  }
  return TruncatedSeries<Ring>(n, std::move(u));
}

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<BivariatePolynomial>;

/// (n)! as an exact rational.
inline Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

/// sinh(t)/t = sum_k t^{2k}/(2k+1)! through the given order.
template <class Ring = Rational>
TruncatedSeries<Ring> sinhc_series(std::size_t order) {
  return TruncatedSeries<Ring>::generate(order, [](std::size_t k) {
    return k % 2 == 0 ? Ring(factorial(static_cast<unsigned>(k + 1)).inverse()) : Ring(Rational(0));
  });
}

/// exp(t) - 1 divided by t = sum_k t^k/(k+1)!.
inline RationalSeries expm1_over_t_series(std::size_t order) {
  return RationalSeries::generate(
      order, [](std::size_t k) { return factorial(static_cast<unsigned>(k + 1)).inverse(); });
}

}  // namespace skein
