#pragma once

/**
 * @file matrix.hpp
 * @brief Dense rational matrices with exact rank.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("RationalMatrix: empty shape");
  }

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : RationalMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
      std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
      ++r;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/**
 * Exact rank by fraction-free (Bareiss) elimination.
 *
 * Each row is first scaled by the lcm of its denominators, which leaves the
 * rank unchanged and turns the problem into one over the integers. The
 * elimination then keeps every intermediate entry equal to a minor of the
 * scaled matrix, so the division by the previous pivot is always exact.
 * Columns without a pivot are skipped.
 */
inline std::size_t matrix_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < cols; ++c) den = lcm(den, m(r, c).denominator());
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = m(r, c).numerator() * (den / m(r, c).denominator());
  }

  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Integer v = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        a[r][c] = std::move(v);
      }
      a[r][col] = 0;
    }
    prev_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace skein
