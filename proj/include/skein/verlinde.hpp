#pragma once

/**
 * @file verlinde.hpp
 * @brief SO(3) Verlinde dimensions as exact polynomials in (p, c).
 *
 * D_g^(2c), the dimension of the level-p SO(3) TQFT space of a genus g
 * surface with one point colored 2c, is computed from the residue formula
 *
 *   D = (-p)^g/2 * ( 4^{1-g} (2c+1)/p * res_{t=0} Phi(t) dt/t^{2g-1}
 *                    - binom(c+g-1, 2g-2) ),
 *   Phi(t) = 2pt/(e^{2pt}-1) * s((2c+1)t) / s(t)^{2g-1},  s(t) = sinh(t)/t.
 *
 * The residue is the coefficient R(p,c) of t^{2g-2} in Phi. Folding the 1/p
 * into (-p)^g gives the division-free form
 *
 *   D = p^{g-1} X(p,c) + p^g Y(c),
 *   X = (-1)^g/2 * 4^{1-g} (2c+1) R(p,c),   Y = -(-1)^g/2 * binom(c+g-1, 2g-2),
 *
 * which is what we evaluate. X is even in p since s(t) is even in t and the
 * Bernoulli factor only contributes p^k t^k.
 */

#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/bernoulli.hpp"
#include "skein/binomial.hpp"
#include "skein/bivariate.hpp"
#include "skein/polynomial.hpp"
#include "skein/rational.hpp"
#include "skein/series.hpp"

namespace skein {

enum class ColorKind {
  kEven,  ///< phi_j(c): D_g^(2c) grouped by powers of p
  kOdd,   ///< phi~_j(s): D_g^(p-2s-1) grouped by powers of p
};

inline const char* to_string(ColorKind kind) { return kind == ColorKind::kEven ? "even" : "odd"; }

/// The two halves of the division-free residue formula.
struct VerlindePieces {
  int genus = 0;
  BivariatePolynomial residue_part;  ///< X(p, c)
  BivariatePolynomial binomial_part; ///< Y(c)
  BivariatePolynomial full;          ///< p^{g-1} X + p^g Y
};

namespace detail {

inline void require_genus(int g, const char* where) {
  if (g < 1) throw std::invalid_argument(std::string(where) + ": genus must be >= 1");
}

inline VerlindePieces compute_pieces(int g) {
  require_genus(g, "verlinde_polynomial");
  const std::size_t target = static_cast<std::size_t>(2 * g - 2);
  // One guard coefficient beyond the residue; never read.
  const std::size_t order = target + 1;

  const auto p = BivariatePolynomial::variable(0);
  const auto c = BivariatePolynomial::variable(1);
  const BernoulliTable bern = bernoulli_numbers(order);

  // 2pt/(e^{2pt}-1) = sum_k B_k (2p)^k t^k / k!
  const PolySeries bernoulli_factor = PolySeries::generate(order, [&](std::size_t k) {
    const Rational scale = bern[k] * Rational(2).pow(static_cast<long>(k)) /
                           factorial(static_cast<unsigned>(k));
    return scale * p.pow(static_cast<unsigned>(k));
  });

  // s((2c+1)t) = sum_k (2c+1)^{2k} t^{2k} / (2k+1)!
  const BivariatePolynomial two_c_plus_one = Rational(2) * c + BivariatePolynomial(1);
  const PolySeries shifted_sinhc = PolySeries::generate(order, [&](std::size_t k) {
    if (k % 2 != 0) return BivariatePolynomial();
    return factorial(static_cast<unsigned>(k + 1)).inverse() *
           two_c_plus_one.pow(static_cast<unsigned>(k));
  });

  // s(t)^{-(2g-1)} has rational coefficients; invert there and lift.
  const RationalSeries inv = series_pow(series_inverse(sinhc_series<Rational>(order)),
                                        static_cast<unsigned>(2 * g - 1));
  const PolySeries inv_lifted = PolySeries::generate(
      order, [&](std::size_t k) { return BivariatePolynomial(inv.coefficient_at(k)); });

  const PolySeries phi = bernoulli_factor * shifted_sinhc * inv_lifted;
  if (phi.order() <= target) throw std::logic_error("verlinde_polynomial: series under-truncated");
  const BivariatePolynomial residue = phi.coefficient_at(target);

  const Rational sign = g % 2 == 0 ? Rational(1) : Rational(-1);
  VerlindePieces out;
  out.genus = g;
  out.residue_part = (sign / 2 * Rational(4).pow(1 - g)) * (two_c_plus_one * residue);
  out.binomial_part = (-sign / 2) * binomial_poly_in_c(g);
  out.full = p.pow(static_cast<unsigned>(g - 1)) * out.residue_part +
             p.pow(static_cast<unsigned>(g)) * out.binomial_part;
  out.full = out.full.renamed("p", "c");
  return out;
}

}  // namespace detail

/// Memoized residue-formula pieces for genus g >= 1.
inline const VerlindePieces& verlinde_pieces(int g) {
  detail::require_genus(g, "verlinde_pieces");
  static std::mutex mutex;
  static std::map<int, VerlindePieces> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, detail::compute_pieces(g)).first;
  return it->second;
}

/// D_g^(2c) as a polynomial in (p, c).
inline BivariatePolynomial verlinde_polynomial(int g) { return verlinde_pieces(g).full; }

/// D_g^(p-2s-1) as a polynomial in (p, s), via c = (p-1)/2 - s.
inline BivariatePolynomial odd_color_polynomial(int g) {
  return substitute_half(verlinde_polynomial(g));
}

inline BivariatePolynomial color_polynomial(int g, ColorKind kind) {
  return kind == ColorKind::kEven ? verlinde_polynomial(g) : odd_color_polynomial(g);
}

/// E = {g-1, g+1, ..., 3g-3}.
inline std::set<int> exponent_set(int g) {
  std::set<int> e;
  for (int k = 0; k < g; ++k) e.insert(g - 1 + 2 * k);
  return e;
}

/// E u {g} for the even kind, E for the odd kind.
inline std::set<int> expected_support(int g, ColorKind kind) {
  std::set<int> e = exponent_set(g);
  if (kind == ColorKind::kEven) e.insert(g);
  return e;
}

class StructureViolation : public std::logic_error {
 public:
  StructureViolation(int exponent, const std::string& what)
      : std::logic_error(what), exponent_(exponent) {}
  int exponent() const { return exponent_; }

 private:
  int exponent_;
};

struct VerlindeDecomposition {
  int genus = 0;
  ColorKind kind = ColorKind::kEven;
  std::map<int, UnivariatePolynomial> parts;  ///< exponent j of p -> phi_j

  BivariatePolynomial reconstruct() const {
    const char* second = kind == ColorKind::kEven ? "c" : "s";
    BivariatePolynomial acc;
    for (const auto& [j, part] : parts)
      acc += BivariatePolynomial::from_univariate(part, 1, "p", second) *
             BivariatePolynomial::monomial(1, j, 0, "p", second);
    return acc.renamed("p", second);
  }
};

/**
 * Groups the even- or odd-color polynomial by powers of p and validates the
 * structure: nonzero parts exactly on the expected support, deg phi_j equal
 * to 3g-2-j, and exact reconstruction. Throws StructureViolation otherwise.
 */
inline VerlindeDecomposition decompose(int g, ColorKind kind) {
  detail::require_genus(g, "decompose");
  const BivariatePolynomial source = color_polynomial(g, kind);
  VerlindeDecomposition out{g, kind, {}};
  const int top = source.degree_in(0).value_or(0);
  for (int j = 0; j <= top; ++j) {
    UnivariatePolynomial part = source.coefficient_of(0, j);
    if (!part.is_zero()) out.parts.emplace(j, std::move(part));
  }

  const std::set<int> support = expected_support(g, kind);
  for (const auto& [j, part] : out.parts)
    if (!support.contains(j))
      throw StructureViolation(j, "decompose: unexpected nonzero part at p^" + std::to_string(j));
  for (int j : support) {
    const auto it = out.parts.find(j);
    if (it == out.parts.end())
      throw StructureViolation(j, "decompose: missing part at p^" + std::to_string(j));
    const int want = 3 * g - 2 - j;
    if (it->second.degree() != Degree(want) || it->second.leading().is_zero())
      throw StructureViolation(j, "decompose: part at p^" + std::to_string(j) + " has degree " +
                                      std::to_string(it->second.degree().value_or(-1)) +
                                      ", expected exactly " + std::to_string(want));
  }
  if (!(out.reconstruct() == source))
    throw StructureViolation(-1, "decompose: parts do not reconstruct the source polynomial");
  return out;
}

/// F_{3g-2} from the Bernoulli closed form:
/// (-1)^g p^{g-1} sum_{k=0}^{2g-1} B_k/(k!(2g-1-k)!) c^{2g-1-k} p^k.
inline BivariatePolynomial expected_leading_form(int g) {
  detail::require_genus(g, "expected_leading_form");
  const BernoulliTable bern = bernoulli_numbers(static_cast<std::size_t>(2 * g - 1));
  const Rational sign = g % 2 == 0 ? Rational(1) : Rational(-1);
  BivariatePolynomial acc;
  for (int k = 0; k <= 2 * g - 1; ++k) {
    const Rational coeff = sign * bern[static_cast<std::size_t>(k)] /
                           (factorial(static_cast<unsigned>(k)) *
                            factorial(static_cast<unsigned>(2 * g - 1 - k)));
    acc += BivariatePolynomial::monomial(coeff, g - 1 + k, 2 * g - 1 - k);
  }
  return acc;
}

struct LeadingTermReport {
  int genus = 0;
  bool matches = false;         ///< F_{3g-2} equals the Bernoulli closed form
  bool higher_parts_vanish = false;
  BivariatePolynomial actual;
  BivariatePolynomial expected;

  bool passed() const { return matches && higher_parts_vanish; }
};

inline LeadingTermReport leading_term_check(int g) {
  const BivariatePolynomial d = verlinde_polynomial(g);
  LeadingTermReport r;
  r.genus = g;
  r.actual = d.homogeneous_part(3 * g - 2);
  r.expected = expected_leading_form(g);
  r.matches = r.actual == r.expected;
  r.higher_parts_vanish = d.total_degree() <= Degree(3 * g - 2);
  return r;
}

struct ParityReport {
  int genus = 0;
  bool split_reconstructs = false;  ///< D == p^{g-1} X + p^g Y
  bool x_even_in_p = false;
  bool y_free_of_p = false;
  bool odd_divisible = false;       ///< p^{g-1} divides D_g^(p-2s-1)
  bool odd_even_in_p = false;
  bool odd_odd_in_s = false;
  std::vector<std::string> violations;  ///< offending monomials

  bool passed() const {
    return split_reconstructs && x_even_in_p && y_free_of_p && odd_divisible && odd_even_in_p &&
           odd_odd_in_s;
  }
};

namespace detail {

inline void collect_parity_violations(const BivariatePolynomial& poly, int index, int parity,
                                      const std::string& label, std::vector<std::string>& out) {
  for (const auto& [e, c] : poly.terms()) {
    const int exp = index == 0 ? e.first : e.second;
    if (exp % 2 == parity) continue;
    out.push_back(label + ": " +
                  BivariatePolynomial::monomial(c, e.first, e.second, poly.name(0), poly.name(1))
                      .str());
  }
}

}  // namespace detail

/// Checks the even-in-p split of D_g^(2c) and the parity of D_g^(p-2s-1)/p^{g-1}.
inline ParityReport parity_checks(int g) {
  const VerlindePieces& pieces = verlinde_pieces(g);
  const auto p = BivariatePolynomial::variable(0);
  ParityReport r;
  r.genus = g;

  r.split_reconstructs = pieces.full == p.pow(static_cast<unsigned>(g - 1)) * pieces.residue_part +
                                            p.pow(static_cast<unsigned>(g)) * pieces.binomial_part;
  r.x_even_in_p = pieces.residue_part.has_parity_in(0, 0);
  detail::collect_parity_violations(pieces.residue_part, 0, 0, "X odd in p", r.violations);
  r.y_free_of_p = pieces.binomial_part.degree_in(0) <= Degree(0);
  if (!r.y_free_of_p) r.violations.push_back("Y depends on p: " + pieces.binomial_part.str());

  const BivariatePolynomial odd = odd_color_polynomial(g);
  try {
    const BivariatePolynomial quotient = odd.divide_by_power(0, g - 1);
    r.odd_divisible = true;
    r.odd_even_in_p = quotient.has_parity_in(0, 0);
    r.odd_odd_in_s = quotient.has_parity_in(1, 1);
    detail::collect_parity_violations(quotient, 0, 0, "quotient odd in p", r.violations);
    detail::collect_parity_violations(quotient, 1, 1, "quotient even in s", r.violations);
  } catch (const std::domain_error&) {
    r.violations.push_back("p^" + std::to_string(g - 1) + " does not divide " + odd.str());
  }
  return r;
}

}  // namespace skein
