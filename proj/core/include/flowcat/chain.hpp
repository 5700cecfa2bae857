#pragma once

// Chain complex extraction: per grading step, the integer matrix of signed
// point counts, with bases ordered lexicographically by object id.

#include <map>
#include <string>
#include <vector>

#include "flowcat/category.hpp"
#include "flowcat/matrix.hpp"

namespace flowcat {

struct ChainComplex {
  // Empty category: max_grading < min_grading and no bases.
  int min_grading = 0;
  int max_grading = -1;
  std::map<int, std::vector<std::string>> basis;  // grading -> sorted object ids
  // step[g]: matrix of the differential out of grading g (rows = basis[g-1],
  // cols = basis[g]); present for min_grading < g <= max_grading.
  std::map<int, IntMatrix> step;

  bool empty() const { return max_grading < min_grading; }
};

ChainComplex chain_complex(const FlowCategory& cat);

}  // namespace flowcat
