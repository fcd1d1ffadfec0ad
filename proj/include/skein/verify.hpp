#pragma once

/**
 * @file verify.hpp
 * @brief Named verification batteries: bernoulli, verlinde, skein, certify.
 *
 * Every battery is a list of exact checks; floating point appears only in
 * the numeric-embedding check of the skein battery, and there only as a
 * consistency test of exact results.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "skein/annulus.hpp"
#include "skein/bernoulli.hpp"
#include "skein/certify.hpp"
#include "skein/curves.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/fusion.hpp"
#include "skein/quantum.hpp"
#include "skein/verlinde.hpp"

namespace skein {

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

struct VerifyLimits {
  int genus_max = 6;            ///< structural checks on the polynomials
  int crosscheck_genus_max = 5;
  int crosscheck_p_max = 13;
  int field_p_max = 31;         ///< cyclotomic identities
  int flat_genus_max = 5;
  int embed_p_max = 13;
  int certify_genus_max = 5;
};

inline SuiteReport verify_bernoulli() {
  SuiteReport out{"bernoulli", {}};
  const BernoulliTable table = bernoulli_numbers(41);

  out.checks.push_back(detail::run_check("known_values", [&](std::string& detail) {
    bool ok = table[0] == Rational(1) && table[1] == Rational(-1, 2);
    for (std::size_t k = 3; k <= 41; k += 2) ok = ok && table[k].is_zero();
    for (std::size_t k = 0; k <= 40; k += 2) ok = ok && !table[k].is_zero();
    detail = "B_0 = 1, B_1 = -1/2, odd B_k = 0 (k >= 3), even B_k != 0 through 41";
    return ok;
  }));

  out.checks.push_back(detail::run_check("half_value_identity", [&](std::string& detail) {
    for (std::size_t m = 0; m <= 40; ++m) {
      const Rational expected = (Rational(2).pow(1 - static_cast<long>(m)) - 1) * table[m];
      if (bernoulli_half_value(m) != expected) {
        detail = "B_m(1/2) != (2^{1-m} - 1) B_m at m = " + std::to_string(m);
        return false;
      }
    }
    detail = "B_m(1/2) = (2^{1-m} - 1) B_m for m <= 40";
    return true;
  }));

  out.checks.push_back(detail::run_check("faulhaber", [&](std::string& detail) {
    for (std::size_t m = 1; m <= 20; ++m) {
      const UnivariatePolynomial poly = faulhaber_poly(m);
      Integer brute = 0;
      for (long n = 1; n <= 50; ++n) {
        brute += pow(Integer(n), m);
        if (poly(Rational(n)) != Rational(brute)) {
          detail = "power sum mismatch at m = " + std::to_string(m) + ", N = " + std::to_string(n);
          return false;
        }
      }
    }
    detail = "both closed forms equal the brute-force sum for m <= 20, N <= 50";
    return true;
  }));

  out.checks.push_back(detail::run_check("generating_function", [&](std::string& detail) {
    constexpr std::size_t order = 12;
    using PolyInX = TruncatedSeries<UnivariatePolynomial>;
    const PolyInX exp_tx = PolyInX::generate(order, [](std::size_t n) {
      return factorial(static_cast<unsigned>(n)).inverse() * UnivariatePolynomial::monomial(1, n);
    });
    const RationalSeries inv = series_inverse(expm1_over_t_series(order));
    const PolyInX t_over = PolyInX::generate(
        order, [&](std::size_t n) { return UnivariatePolynomial(inv.coefficient_at(n)); });
    const PolyInX gen = exp_tx * t_over;
    for (std::size_t n = 0; n <= order; ++n) {
      const UnivariatePolynomial scaled = factorial(static_cast<unsigned>(n)) * gen.coefficient_at(n);
      if (!(scaled == bernoulli_polynomial(n))) {
        detail = "coefficient of t^" + std::to_string(n) + " differs from B_n(x)/n!";
        return false;
      }
    }
    detail = "t e^{tx}/(e^t - 1) matches B_n(x)/n! through t^12";
    return true;
  }));

  out.checks.push_back(detail::run_check("shifted_parity", [&](std::string& detail) {
    const UnivariatePolynomial shift{Rational(1, 2), Rational(1, 2)};  // (p + 1)/2
    for (std::size_t beta = 0; beta <= 8; ++beta) {
      const bool even_ok = bernoulli_polynomial(2 * beta).compose(shift).is_even();
      const bool odd_ok = bernoulli_polynomial(2 * beta + 1).compose(shift).is_odd();
      if (!even_ok || !odd_ok) {
        detail = "parity fails at beta = " + std::to_string(beta);
        return false;
      }
    }
    detail = "B_{2b}((p+1)/2) even and B_{2b+1}((p+1)/2) odd in p for b <= 8";
    return true;
  }));
  return out;
}

inline SuiteReport verify_verlinde(const VerifyLimits& limits = {}) {
  SuiteReport out{"verlinde", {}};

  out.checks.push_back(detail::run_check("genus_one", [&](std::string& detail) {
    const auto p = BivariatePolynomial::variable(0);
    const auto c = BivariatePolynomial::variable(1);
    const BivariatePolynomial expected = Rational(1, 2) * p - c - BivariatePolynomial(Rational(1, 2));
    const BivariatePolynomial odd = odd_color_polynomial(1);
    detail = "D_1 = " + verlinde_polynomial(1).str() + ", odd: " + odd.str();
    return verlinde_polynomial(1) == expected &&
           odd == BivariatePolynomial::variable(1, "p", "s");
  }));

  for (ColorKind kind : {ColorKind::kEven, ColorKind::kOdd}) {
    out.checks.push_back(detail::run_check(
        std::string("structure_") + to_string(kind), [&](std::string& detail) {
          for (int g = 1; g <= limits.genus_max; ++g) {
            const VerlindeDecomposition dec = decompose(g, kind);
            // Leading coefficients: (-1)^g B_k/(k!(2g-1-k)!) for phi_{g-1+k} (even kind),
            // (-1)^{g+1} B_{2k}(1/2)/((2g-1-2k)!(2k)!) for phi~_{g-1+2k} (odd kind).
            const BernoulliTable bern = bernoulli_numbers(static_cast<std::size_t>(2 * g));
            for (const auto& [j, part] : dec.parts) {
              const int k = j - (g - 1);
              Rational expected;
              if (kind == ColorKind::kEven) {
                const Rational sign = g % 2 == 0 ? 1 : -1;
                expected = sign * bern[static_cast<std::size_t>(k)] /
                           (factorial(static_cast<unsigned>(k)) *
                            factorial(static_cast<unsigned>(2 * g - 1 - k)));
              } else {
                const Rational sign = g % 2 == 0 ? -1 : 1;
                expected = sign * bernoulli_half_value(static_cast<std::size_t>(k)) /
                           (factorial(static_cast<unsigned>(2 * g - 1 - k)) *
                            factorial(static_cast<unsigned>(k)));
              }
              if (part.leading() != expected) {
                detail = "genus " + std::to_string(g) + ", p^" + std::to_string(j) +
                         ": leading coefficient " + part.leading().str() + ", expected " +
                         expected.str();
                return false;
              }
            }
          }
          detail = "support, exact degrees and Bernoulli leading coefficients for g <= " +
                   std::to_string(limits.genus_max);
          return true;
        }));
  }

  out.checks.push_back(detail::run_check("leading_term", [&](std::string& detail) {
    for (int g = 1; g <= limits.genus_max; ++g) {
      const LeadingTermReport r = leading_term_check(g);
      if (!r.passed()) {
        detail = "genus " + std::to_string(g) + ": " + r.actual.str() + " vs " + r.expected.str();
        return false;
      }
    }
    detail = "F_{3g-2} matches and higher parts vanish for g <= " + std::to_string(limits.genus_max);
    return true;
  }));

  out.checks.push_back(detail::run_check("parity", [&](std::string& detail) {
    for (int g = 1; g <= limits.genus_max; ++g) {
      const ParityReport r = parity_checks(g);
      if (!r.passed()) {
        detail = "genus " + std::to_string(g) + ": " +
                 (r.violations.empty() ? std::string("split failed") : r.violations.front());
        return false;
      }
    }
    detail = "X even in p; D_odd/p^{g-1} even in p, odd in s for g <= " +
             std::to_string(limits.genus_max);
    return true;
  }));

  out.checks.push_back(detail::run_check("fusion_oracle", [&](std::string& detail) {
    const CrosscheckReport r = oracle_crosscheck(limits.crosscheck_genus_max, limits.crosscheck_p_max);
    detail = std::to_string(r.compared) + " comparisons for g <= " +
             std::to_string(limits.crosscheck_genus_max) + ", p <= " +
             std::to_string(limits.crosscheck_p_max) + ", " + std::to_string(r.mismatches.size()) +
             " mismatches";
    return r.passed();
  }));
  return out;
}

inline SuiteReport verify_skein(const VerifyLimits& limits = {}) {
  SuiteReport out{"skein", {}};

  out.checks.push_back(detail::run_check("roots_of_unity", [&](std::string& detail) {
    for (int p = 3; p <= limits.field_p_max; p += 2) {
      const CyclotomicField f(p);
      const CyclotomicElement a = f.generator();
      if (!(a.pow(2L * p) == f.one()) || !(a.pow(p) == -f.one()) ||
          !quantum_integer(p, f).is_zero()) {
        detail = "A^{2p} = 1, A^p = -1 or [p] = 0 fails at p = " + std::to_string(p);
        return false;
      }
      for (int n = 1; n < p; ++n) {
        if (!(quantum_integer(p - n, f) == -quantum_integer(n, f))) {
          detail = "[p-n] != -[n] at p = " + std::to_string(p) + ", n = " + std::to_string(n);
          return false;
        }
      }
    }
    detail = "A^{2p} = 1, A^p = -1, [p] = 0, [p-n] = -[n] for odd p <= " +
             std::to_string(limits.field_p_max);
    return true;
  }));

  out.checks.push_back(detail::run_check("flat_curve_identity", [&](std::string& detail) {
    for (int p = 3; p <= limits.field_p_max; p += 2) {
      const CyclotomicField f(p);
      for (int g = 1; g <= limits.flat_genus_max; ++g)
        if (!lemma_flat_check(g, f).equal) {
          detail = "closed forms differ at p = " + std::to_string(p) + ", g = " + std::to_string(g);
          return false;
        }
    }
    detail = "(-p/(A-A^{-1})^2)^{g-1} = (D^2/<e_{d-1}>^2)^{g-1} for odd p <= " +
             std::to_string(limits.field_p_max) + ", g <= " + std::to_string(limits.flat_genus_max);
    return true;
  }));

  out.checks.push_back(detail::run_check("recoloring", [&](std::string& detail) {
    for (int p = 3; p <= limits.field_p_max; p += 2) {
      const CyclotomicField f(p);
      for (int s = 1; s <= f.d(); ++s)
        if (!recoloring_check(s, f)) {
          detail = "<e_{2s-1}> != <e_{p-2s-1}> at p = " + std::to_string(p) +
                   ", s = " + std::to_string(s);
          return false;
        }
    }
    detail = "<e_{2s-1}> = <e_{p-2s-1}> for all s, odd p <= " + std::to_string(limits.field_p_max);
    return true;
  }));

  out.checks.push_back(detail::run_check("e_basis_product", [&](std::string& detail) {
    for (std::size_t i = 0; i <= 20; ++i)
      for (std::size_t j = 0; j <= 20; ++j)
        if (!(e_product(i, j) == AnnulusSkein::basis(i) * AnnulusSkein::basis(j))) {
          detail = "e_" + std::to_string(i) + " e_" + std::to_string(j) + " mismatch";
          return false;
        }
    detail = "product law matches z-polynomial multiplication for i, j <= 20";
    return true;
  }));

  out.checks.push_back(detail::run_check("nonseparating_curves", [&](std::string& detail) {
    int compared = 0;
    for (int p = 3; p <= limits.crosscheck_p_max; p += 2) {
      const CyclotomicField f(p);
      for (int g = 1; g <= limits.flat_genus_max; ++g) {
        const CyclotomicElement m0 = eval_nonseparating_curve(g, 0, f);
        if (!(m0 == f.constant(Rational(dimension(g, p, 0))))) {
          detail = "m = 0 differs from D_g^(0) at p = " + std::to_string(p);
          return false;
        }
        if (!(eval_nonseparating_curve(g, 1, f) == lemma_flat_check(g, f).lhs)) {
          detail = "m = 1 differs from the flat-curve value at p = " + std::to_string(p) +
                   ", g = " + std::to_string(g);
          return false;
        }
        const CyclotomicElement scale = f.constant(Rational(-p).pow(g - 1));
        for (int m = 1; m < p; m += 2) {
          const CurveEvaluation ev = eval_nonseparating_curve_detailed(g, m, f);
          if (!(ev.value == scale * ev.unit_sum)) {
            detail = "odd color " + std::to_string(m) + " is not (-p)^{g-1} times a p-free sum";
            return false;
          }
          ++compared;
        }
      }
    }
    detail = std::to_string(compared) + " odd-color evaluations; m = 0 and m = 1 consistent";
    return true;
  }));

  out.checks.push_back(detail::run_check("numeric_embedding", [&](std::string& detail) {
    constexpr double tol = 1e-9;
    double worst = 0.0;
    for (int p = 3; p <= limits.embed_p_max; p += 2) {
      const CyclotomicField f(p);
      for (int k = 1; k < 2 * p; ++k) {
        if (std::gcd(k, 2 * p) != 1) continue;
        const std::complex<double> a = std::polar(1.0, std::numbers::pi * k / p);
        const std::complex<double> dm = a * a - 1.0 / (a * a);
        for (int n = 0; n <= p; ++n) {
          const std::complex<double> want = (std::pow(a, 2 * n) - std::pow(a, -2 * n)) / dm;
          worst = std::max(worst, std::abs(quantum_integer(n, f).embed(k) - want));
        }
        const std::complex<double> d2 = -static_cast<double>(p) / (dm * dm);
        worst = std::max(worst, std::abs(d_squared(f).embed(k) - d2));
        for (int g = 1; g <= 3; ++g) {
          const std::complex<double> diff = a - 1.0 / a;
          const std::complex<double> flat =
              std::pow(-static_cast<double>(p) / (diff * diff), g - 1);
          const FlatCheck fc = lemma_flat_check(g, f);
          worst = std::max(worst, std::abs(fc.lhs.embed(k) - flat) / std::max(1.0, std::abs(flat)));
          worst = std::max(worst, std::abs(fc.rhs.embed(k) - flat) / std::max(1.0, std::abs(flat)));
        }
      }
    }
    // Reported as a power-of-ten bound so exact-mode reports carry no decimals.
    const int exponent = worst > 0 ? static_cast<int>(std::ceil(std::log10(worst))) : -300;
    detail = "max deviation <= 1e" + std::to_string(exponent) + " (tolerance 1e-9) for p <= " +
             std::to_string(limits.embed_p_max);
    return worst < tol;
  }));
  return out;
}

inline SuiteReport verify_certify(const VerifyLimits& limits = {}) {
  SuiteReport out{"certify", {}};
  out.checks.push_back(detail::run_check("known_bounds", [&](std::string& detail) {
    detail = "lower_bound(0..2) = " + to_string(lower_bound(0)) + ", " + to_string(lower_bound(1)) +
             ", " + to_string(lower_bound(2));
    return lower_bound(0) == 1 && lower_bound(1) == 9 && lower_bound(2) == 35;
  }));
  for (int g = 1; g <= limits.certify_genus_max; ++g) {
    out.checks.push_back(detail::run_check("certificate_g" + std::to_string(g), [&](std::string& detail) {
      const Certificate cert = build_certificate(g);
      detail = "lower bound " + to_string(cert.lower_bound) + ", class (0,0) " +
               to_string(cert.dim_00) + ", class (0,1) " + to_string(cert.dim_01);
      for (const auto& c : cert.checks)
        if (!c.passed) detail += "; failed " + c.name + ": " + c.detail;
      return cert.valid && cert.dim_00 == g + 1 && cert.dim_01 == g;
    }));
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bernoulli", "verlinde", "skein", "certify", "all"};
  return names;
}

/// Runs one named suite, or all four for "all".
inline std::vector<SuiteReport> run_suite(std::string_view name, const VerifyLimits& limits = {}) {
  std::vector<SuiteReport> out;
  const bool all = name == "all";
  if (all || name == "bernoulli") out.push_back(verify_bernoulli());
  if (all || name == "verlinde") out.push_back(verify_verlinde(limits));
  if (all || name == "skein") out.push_back(verify_skein(limits));
  if (all || name == "certify") out.push_back(verify_certify(limits));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace skein
