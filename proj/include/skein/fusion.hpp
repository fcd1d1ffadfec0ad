#pragma once

/**
 * @file fusion.hpp
 * @brief Verlinde dimensions by the fusion recursion, and evaluation of the
 *        residue polynomials at admissible colors.
 *
 * The recursion
 *   D_1^(p-2s-1) = s,
 *   D_{g+1}^(p-2s-1) = sum_{y=1}^{d} K_{s,y} D_g^(p-2y-1),
 *   K_{s,y} = (p - 2 max(s,y)) min(s,y),
 * shares no code with the residue formula and serves as its oracle.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational.hpp"
#include "skein/verlinde.hpp"

namespace skein {

namespace detail {

inline void require_odd_level(int p, const char* where) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument(std::string(where) + ": p must be odd and >= 3, got " +
                                std::to_string(p));
}

}  // namespace detail

/// Two-point genus-one dimensions K_{s,y}, 1 <= s, y <= d.
class FusionTable {
 public:
  explicit FusionTable(int p) : p_(p) {
    detail::require_odd_level(p, "FusionTable");
    const int d = (p - 1) / 2;
    entries_.assign(static_cast<std::size_t>(d), std::vector<Integer>(static_cast<std::size_t>(d)));
    for (int s = 1; s <= d; ++s)
      for (int y = 1; y <= d; ++y)
        entries_[s - 1][y - 1] = Integer(p - 2 * std::max(s, y)) * std::min(s, y);
  }

  int p() const { return p_; }
  int d() const { return (p_ - 1) / 2; }
  const Integer& operator()(int s, int y) const { return entries_.at(s - 1).at(y - 1); }

 private:
  int p_;
  std::vector<std::vector<Integer>> entries_;
};

/**
 * Memoized fusion recursion for one level p. Genus rows are filled on demand
 * under a mutex; filled rows are never modified.
 */
class FusionOracle {
 public:
  explicit FusionOracle(int p) : table_(p) {
    std::vector<Integer> base;
    for (int s = 1; s <= table_.d(); ++s) base.emplace_back(s);
    rows_.push_back(std::move(base));
  }

  const FusionTable& table() const { return table_; }

  Integer dimension(int g, int s) {
    if (g < 1) throw std::invalid_argument("fusion_dimension: genus must be >= 1");
    if (s < 1 || s > table_.d())
      throw std::out_of_range("fusion_dimension: s must lie in 1.." + std::to_string(table_.d()) +
                              ", got " + std::to_string(s));
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(rows_.size()) < g) {
      const std::vector<Integer>& prev = rows_.back();
      std::vector<Integer> next(prev.size());
      for (int t = 1; t <= table_.d(); ++t) {
        Integer acc = 0;
        for (int y = 1; y <= table_.d(); ++y) acc += table_(t, y) * prev[y - 1];
        next[t - 1] = std::move(acc);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[g - 1][s - 1];
  }

 private:
  FusionTable table_;
  std::mutex mutex_;
  std::vector<std::vector<Integer>> rows_;  // rows_[g-1][s-1]
};

/// D_g^(p-2s-1) by the fusion recursion; process-wide memo keyed by (g, p, s).
inline Integer fusion_dimension(int g, int p, int s) {
  detail::require_odd_level(p, "fusion_dimension");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FusionOracle>> oracles;
  FusionOracle* oracle = nullptr;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = oracles[p];
    if (!slot) slot = std::make_unique<FusionOracle>(p);
    oracle = slot.get();
  }
  return oracle->dimension(g, s);
}

class NonIntegralDimension : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Dimension of the genus g space with one point colored m, 0 <= m <= p-2.
 * Even m evaluates D_g^(2c) at c = m/2; odd m is recolored to the even
 * color p - m - 2 first.
 */
inline Integer dimension(int g, int p, int m) {
  detail::require_odd_level(p, "dimension");
  if (m < 0 || m > p - 2)
    throw std::out_of_range("dimension: color must lie in 0.." + std::to_string(p - 2) +
                            ", got " + std::to_string(m));
  if (m % 2 == 1) return dimension(g, p, p - m - 2);
  const Rational value = verlinde_polynomial(g)(Rational(p), Rational(m / 2));
  if (!value.is_integer() || value.sign() < 0)
    throw NonIntegralDimension("dimension: D_" + std::to_string(g) + " at p=" + std::to_string(p) +
                               ", m=" + std::to_string(m) + " evaluates to " + value.str());
  return value.to_integer();
}

/// The fusion index s matching an admissible color m (even 2c -> d - c, odd 2s-1 -> s).
inline int fusion_index_for_color(int p, int m) {
  const int d = (p - 1) / 2;
  return m % 2 == 0 ? d - m / 2 : (m + 1) / 2;
}

struct CrosscheckEntry {
  int genus = 0;
  int p = 0;
  int color = 0;  ///< admissible color m, or -1 for a direct (p, s) polynomial comparison
  int s = 0;
  Rational residue_value;
  Integer fusion_value;
};

struct CrosscheckReport {
  std::size_t compared = 0;
  std::vector<CrosscheckEntry> mismatches;
  bool passed() const { return compared > 0 && mismatches.empty(); }
};

/**
 * Compares residue-formula values with the fusion recursion for every
 * 1 <= g <= g_max and odd 3 <= p <= p_max: the odd-color polynomial at each
 * (p, s), and dimension(g, p, m) at every admissible color m.
 */
inline CrosscheckReport oracle_crosscheck(int g_max, int p_max) {
  CrosscheckReport report;
  for (int g = 1; g <= g_max; ++g) {
    const BivariatePolynomial odd = odd_color_polynomial(g);
    for (int p = 3; p <= p_max; p += 2) {
      const int d = (p - 1) / 2;
      for (int s = 1; s <= d; ++s) {
        const Rational value = odd(Rational(p), Rational(s));
        const Integer expected = fusion_dimension(g, p, s);
        ++report.compared;
        if (value != Rational(expected))
          report.mismatches.push_back({g, p, -1, s, value, expected});
      }
      for (int m = 0; m <= p - 2; ++m) {
        const int s = fusion_index_for_color(p, m);
        const Integer expected = fusion_dimension(g, p, s);
        Rational value;
        try {
          value = Rational(dimension(g, p, m));
        } catch (const NonIntegralDimension&) {
          value = verlinde_polynomial(g)(Rational(p), Rational(m % 2 == 0 ? m / 2 : (p - m - 2) / 2));
        }
        ++report.compared;
        if (value != Rational(expected)) report.mismatches.push_back({g, p, m, s, value, expected});
      }
    }
  }
  return report;
}

}  // namespace skein
