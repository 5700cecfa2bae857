#include "flowcat/smith.hpp"

#include <optional>

#include "int_util.hpp"

namespace flowcat {

namespace {

using detail::centered_quotient;

// Smallest |value| among nonzero entries of the trailing submatrix starting
// at (k,k); ties broken by lexicographically smallest (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& B,
                                                              std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = k; i < B.rows(); ++i)
    for (std::size_t j = k; j < B.cols(); ++j) {
      const Int& v = B.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm out;
  out.U = IntMatrix::identity(m);
  out.V = IntMatrix::identity(n);
  IntMatrix B = A;

  // Row ops on B are mirrored on U (tracking left multiplication); column
  // ops are mirrored on V (right multiplication).
  auto row_swap = [&](std::size_t a, std::size_t b) {
    B.swap_rows(a, b);
    out.U.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    B.swap_cols(a, b);
    out.V.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& k) {
    B.add_row_multiple(dst, src, k);
    out.U.add_row_multiple(dst, src, k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& k) {
    B.add_col_multiple(dst, src, k);
    out.V.add_col_multiple(dst, src, k);
  };

  std::size_t k = 0;
  while (k < m && k < n) {
    auto pivot = find_pivot(B, k);
    if (!pivot) break;
    row_swap(k, pivot->first);
    col_swap(k, pivot->second);

    while (true) {
      // Clear column k under the pivot; a nonzero remainder becomes the new,
      // strictly smaller pivot.
      bool shrunk = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (B.at(i, k) == 0) continue;
        Int q = centered_quotient(B.at(i, k), B.at(k, k));
        if (q != 0) row_add(i, k, -q);
        if (B.at(i, k) != 0) {
          row_swap(k, i);
          shrunk = true;
          break;
        }
      }
      if (shrunk) continue;
      bool col_clear = true;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (B.at(k, j) == 0) continue;
        Int q = centered_quotient(B.at(k, j), B.at(k, k));
        if (q != 0) col_add(j, k, -q);
        if (B.at(k, j) != 0) {
          col_swap(k, j);
          col_clear = false;
          break;
        }
      }
      if (!col_clear) continue;

      // Row and column k are clear. Enforce the divisibility chain: fold the
      // first trailing row with an entry not divisible by the pivot into row
      // k and restart (the pivot then shrinks to a proper divisor).
      bool divisible = true;
      for (std::size_t i = k + 1; i < m && divisible; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (B.at(i, j) % B.at(k, k) != 0) {
            row_add(k, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }

    if (B.at(k, k) < 0) {
      B.negate_row(k);
      out.U.negate_row(k);
    }
    ++k;
  }

  for (std::size_t i = 0; i < k; ++i) out.diag.push_back(B.at(i, i));
  return out;
}

}  // namespace flowcat
