#pragma once

/**
 * @file bivariate.hpp
 * @brief Sparse exact polynomials in two variables.
 *
 * Terms are keyed by the exponent pair (i, j) of first^i * second^j. Zero
 * coefficients are never stored. The two variable names only affect
 * rendering; arithmetic between polynomials with different names is allowed
 * and keeps the names of the left operand.
 */

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/polynomial.hpp"
#include "skein/rational.hpp"

namespace skein {

struct Exponents {
  int first = 0;
  int second = 0;

  int total() const { return first + second; }
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

class BivariatePolynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const Rational& c) { add_term({0, 0}, c); }  // NOLINT(google-explicit-constructor)
  BivariatePolynomial(int c) : BivariatePolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// Returns the variable polynomial `first` (index 0) or `second` (index 1).
  static BivariatePolynomial variable(int index, std::string first = "p",
                                      std::string second = "c") {
    BivariatePolynomial r;
    r.names_ = {std::move(first), std::move(second)};
    r.add_term(index == 0 ? Exponents{1, 0} : Exponents{0, 1}, 1);
    return r;
  }

  static BivariatePolynomial monomial(const Rational& c, int i, int j, std::string first = "p",
                                      std::string second = "c") {
    BivariatePolynomial r;
    r.names_ = {std::move(first), std::move(second)};
    r.add_term({i, j}, c);
    return r;
  }

  /// Embeds a univariate polynomial in the chosen variable.
  static BivariatePolynomial from_univariate(const UnivariatePolynomial& u, int index,
                                             std::string first = "p", std::string second = "c") {
    BivariatePolynomial r;
    r.names_ = {std::move(first), std::move(second)};
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
      const int e = static_cast<int>(k);
      r.add_term(index == 0 ? Exponents{e, 0} : Exponents{0, e}, u.coeffs()[k]);
    }
    return r;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::string& name(int index) const { return index == 0 ? names_.first : names_.second; }

  BivariatePolynomial renamed(std::string first, std::string second) const {
    BivariatePolynomial r = *this;
    r.names_ = {std::move(first), std::move(second)};
    return r;
  }

  Rational coeff(int i, int j) const {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Degree total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
  }

  /// Degree in a single variable.
  Degree degree_in(int index) const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, index == 0 ? e.first : e.second);
    return d;
  }

  /// Smallest exponent of the given variable over all terms.
  Degree min_degree_in(int index) const {
    if (terms_.empty()) return std::nullopt;
    int d = index == 0 ? terms_.begin()->first.first : terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) d = std::min(d, index == 0 ? e.first : e.second);
    return d;
  }

  /// Sum of the terms of total degree exactly n.
  BivariatePolynomial homogeneous_part(int n) const {
    BivariatePolynomial r = empty_like();
    for (const auto& [e, c] : terms_)
      if (e.total() == n) r.terms_.emplace(e, c);
    return r;
  }

  /// The polynomial in the other variable multiplying first^k (index 0) or second^k (index 1).
  UnivariatePolynomial coefficient_of(int index, int k) const {
    std::vector<Rational> cs;
    for (const auto& [e, c] : terms_) {
      const int here = index == 0 ? e.first : e.second;
      const int other = index == 0 ? e.second : e.first;
      if (here != k) continue;
      if (static_cast<int>(cs.size()) <= other) cs.resize(other + 1);
      cs[other] = c;
    }
    return UnivariatePolynomial(std::move(cs));
  }

  /// Divides by first^k (index 0) or second^k (index 1); throws unless exact.
  BivariatePolynomial divide_by_power(int index, int k) const {
    BivariatePolynomial r = empty_like();
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      int& slot = index == 0 ? f.first : f.second;
      slot -= k;
      if (slot < 0) throw std::domain_error("BivariatePolynomial: division by monomial is not exact");
      r.terms_.emplace(f, c);
    }
    return r;
  }

  /// True when every term has an even (parity 0) or odd (parity 1) exponent in the variable.
  bool has_parity_in(int index, int parity) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
      const int e = index == 0 ? t.first.first : t.first.second;
      return ((e % 2) + 2) % 2 == parity;
    });
  }

  /// Exact substitution of both variables by values in a ring T.
  template <class T>
  T evaluate(const T& first, const T& second) const {
    T acc(Rational(0));
    for (const auto& [e, c] : terms_) {
      T term(c);
      for (int k = 0; k < e.first; ++k) term = term * first;
      for (int k = 0; k < e.second; ++k) term = term * second;
      acc = acc + term;
    }
    return acc;
  }

  Rational operator()(const Rational& first, const Rational& second) const {
    return evaluate<Rational>(first, second);
  }

  /// Substitutes polynomials for both variables; names come from the arguments.
  BivariatePolynomial substitute(const BivariatePolynomial& first,
                                 const BivariatePolynomial& second) const {
    BivariatePolynomial acc = first.empty_like();
    std::vector<BivariatePolynomial> first_pows{BivariatePolynomial(1)};
    std::vector<BivariatePolynomial> second_pows{BivariatePolynomial(1)};
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(first_pows.size()) <= e.first)
        first_pows.push_back(first_pows.back() * first);
      while (static_cast<int>(second_pows.size()) <= e.second)
        second_pows.push_back(second_pows.back() * second);
      acc += c * (first_pows[e.first] * second_pows[e.second]);
    }
    acc.names_ = first.names_;
    return acc;
  }

  BivariatePolynomial operator-() const {
    BivariatePolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    if (terms_.empty()) names_ = o.names_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
    if (terms_.empty()) names_ = o.names_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }

  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial r = a.terms_.empty() ? b.empty_like() : a.empty_like();
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }

  friend BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a) {
    BivariatePolynomial r = a.empty_like();
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  BivariatePolynomial& operator*=(const BivariatePolynomial& o) { return *this = *this * o; }

  BivariatePolynomial pow(unsigned e) const {
    BivariatePolynomial result = empty_like() + BivariatePolynomial(1), base = *this;
    result.names_ = names_;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Equality compares terms only; variable names are presentation.
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /**
   * Canonical text form. Terms are listed in graded-lexicographic order:
   * ascending total degree, and within one degree descending exponent of the
   * first variable. Coefficients are exact rationals ("-1/2"), a unit
   * coefficient is omitted, and factors are joined by '*'. Example:
   * "-1/2 + 1/2*p - c".
   */
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      if (a.first.total() != b.first.total()) return a.first.total() < b.first.total();
      return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [e, c] : ordered) {
      const Rational mag = c.abs();
      if (first_term) {
        if (c.sign() < 0) os << '-';
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first_term = false;
      if (e.total() == 0) {
        os << mag;
        continue;
      }
      bool need_star = false;
      if (!mag.is_one()) {
        os << mag;
        need_star = true;
      }
      auto emit = [&](const std::string& var, int k) {
        if (k == 0) return;
        if (need_star) os << '*';
        os << var;
        if (k > 1) os << '^' << k;
        need_star = true;
      };
      emit(names_.first, e.first);
      emit(names_.second, e.second);
    }
    return os.str();
  }

 private:
  BivariatePolynomial empty_like() const {
    BivariatePolynomial r;
    r.names_ = names_;
    return r;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TermMap terms_;
  std::pair<std::string, std::string> names_{"p", "c"};
};

/// Rewrites a polynomial in (p, c) as one in (p, s) via c = (p - 1)/2 - s.
inline BivariatePolynomial substitute_half(const BivariatePolynomial& poly) {
  const auto p = BivariatePolynomial::variable(0, "p", "s");
  const auto s = BivariatePolynomial::variable(1, "p", "s");
  const auto c = Rational(1, 2) * p - BivariatePolynomial(Rational(1, 2)).renamed("p", "s") - s;
  return poly.substitute(p, c).renamed("p", "s");
}

}  // namespace skein
