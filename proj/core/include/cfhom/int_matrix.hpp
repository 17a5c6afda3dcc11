#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "cfhom/integer.hpp"

namespace cfhom {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero-row and zero-column matrices are valid values; they stand for the
/// zero map into or out of the zero module, which keeps boundary maps at the
/// ends of a chain complex uniform.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Rows must all have the same length; `cols` fixes the width of an empty row list.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);
  /// Block [left | right]; row counts must agree.
  static IntMatrix hconcat(const IntMatrix& left, const IntMatrix& right);
  /// Block diagonal [[a, 0], [0, b]].
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Integer> entries() const noexcept { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  IntMatrix transpose() const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  /// Entries reduced into [0, q).
  IntMatrix reduced_mod(const Integer& q) const;
  IntMatrix scaled(const Integer& factor) const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Integer determinant() const;

  // Elementary operations. Row/column indices are not bounds-checked.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// True when a and b agree entrywise modulo q (q = 0 means exact equality).
bool equal_mod(const IntMatrix& a, const IntMatrix& b, const Integer& q);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace cfhom
