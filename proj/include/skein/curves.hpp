#pragma once

/**
 * @file curves.hpp
 * @brief Invariants of a colored non-separating curve on Sigma_g x 1.
 *
 * For gamma non-separating with surface framing and color m:
 *   m even:  D_g^(0) - sum_{i=1}^{m/2}     (-p)^{g-1} / (A^{2i}   - A^{-2i})^{2g-2}
 *   m odd:             sum_{i=1}^{(m+1)/2} (-p)^{g-1} / (A^{2i-1} - A^{-(2i-1)})^{2g-2}
 *
 * The odd-case denominator is A^{2i-1} - A^{-(2i-1)}: at m = 1 this
 * reproduces (-p/(A - A^{-1})^2)^{g-1}. The literal reading
 * A^{2i-1} - A^{-2i-1} is available as OddDenominator::kLiteral for
 * comparison only.
 */

#include <stdexcept>
#include <string>

#include "skein/cyclotomic.hpp"
#include "skein/fusion.hpp"
#include "skein/quantum.hpp"
#include "skein/rational.hpp"

namespace skein {

enum class OddDenominator {
  kSymmetric,  ///< A^{2i-1} - A^{-(2i-1)}
  kLiteral,    ///< A^{2i-1} - A^{-2i-1}
};

class VanishingDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CurveEvaluation {
  CyclotomicElement value;
  /// The p-free sum: value = (-p)^{g-1} * unit_sum (odd m), or D_g^(0) - (-p)^{g-1} * unit_sum.
  CyclotomicElement unit_sum;
};

inline CurveEvaluation eval_nonseparating_curve_detailed(
    int g, int m, const CyclotomicField& field,
    OddDenominator reading = OddDenominator::kSymmetric) {
  if (g < 1) throw std::invalid_argument("eval_nonseparating_curve: genus must be >= 1");
  if (m < 0) throw std::invalid_argument("eval_nonseparating_curve: color must be >= 0");
  const int p = field.p();
  const CyclotomicElement scale = field.constant(Rational(-p).pow(g - 1));

  CyclotomicElement sum = field.zero();
  const int terms = m % 2 == 0 ? m / 2 : (m + 1) / 2;
  for (int i = 1; i <= terms; ++i) {
    CyclotomicElement den = field.zero();
    if (m % 2 == 0) {
      den = generator_difference(2 * i, field);
    } else if (reading == OddDenominator::kSymmetric) {
      den = generator_difference(2 * i - 1, field);
    } else {
      den = field.power_of_generator(2 * i - 1) - field.power_of_generator(-2 * i - 1);
    }
    if (den.is_zero())
      throw VanishingDenominator("eval_nonseparating_curve: denominator vanishes at i=" +
                                 std::to_string(i) + " for p=" + std::to_string(p) +
                                 " (color " + std::to_string(m) + " too large)");
    sum = sum + den.pow(2 * g - 2).inverse();
  }

  if (m % 2 == 1) return {scale * sum, sum};
  const CyclotomicElement base = field.constant(Rational(dimension(g, p, 0)));
  return {base - scale * sum, sum};
}

inline CyclotomicElement eval_nonseparating_curve(int g, int m, const CyclotomicField& field,
                                                  OddDenominator reading = OddDenominator::kSymmetric) {
  return eval_nonseparating_curve_detailed(g, m, field, reading).value;
}

}  // namespace skein
