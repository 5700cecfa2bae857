#pragma once

// Exact Smith normal form over the integers with transformation matrices.

#include <vector>

#include "flowcat/matrix.hpp"

namespace flowcat {

struct SmithForm {
  // U (rows x rows) and V (cols x cols) are unimodular with U * A * V equal
  // to the diagonal padded with zeros. diag holds the nonzero invariant
  // factors d1 | d2 | ... | dr, all positive (signs are absorbed into U).
  IntMatrix U, V;
  std::vector<Int> diag;
};

// Deterministic: pivots are chosen with smallest absolute value, ties broken
// by lexicographically smallest (row, col).
SmithForm smith_normal_form(const IntMatrix& A);

}  // namespace flowcat
