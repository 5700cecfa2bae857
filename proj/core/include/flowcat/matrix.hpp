#pragma once

// Dense integer matrices with arbitrary-precision entries (GMP).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace flowcat {

using Int = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t count_nonzero() const;

  // Elementary operations (determinant-preserving up to sign for swaps).
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);  // row dst += k * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);  // col dst += k * col src

  // Exact determinant (Bareiss fraction-free elimination); square matrices only.
  Int det() const;

  std::string to_string() const;  // one row per line: "[a b c]"

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace flowcat
