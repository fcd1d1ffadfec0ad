#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Thin value type over GMP's mpq_class. Every constructor canonicalizes, so
 * the denominator is always positive and coprime to the numerator, and zero
 * is uniquely 0/1. The wrapper exists so that gmpxx expression templates
 * never leak into client code (`auto x = a + b` is always a Rational).
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace skein {

using Integer = mpz_class;

inline std::string to_string(const Integer& n) { return n.get_str(); }

class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}                 // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(unsigned int n) : value_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(unsigned long n) : value_(n) {}       // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}      // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  /// Parses "a" or "a/b" with optional leading sign.
  static Rational parse(std::string_view text) {
    const std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
  }

  /// Integer power; negative exponents invert.
  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Returns the value as an Integer; throws if it is not integral.
  Integer to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
    return value_.get_num();
  }

  double to_double() const { return value_.get_d(); }

  /// "n" for integers, "n/d" otherwise. Never a decimal.
  std::string str() const { return value_.get_str(10); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class q) : value_(std::move(q)) {}

  mpq_class value_{0};
};

inline std::string to_string(const Rational& r) { return r.str(); }

/// Least common multiple of denominators; used to clear fractions.
inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace skein

template <>
struct std::hash<skein::Rational> {
  std::size_t operator()(const skein::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
