#pragma once

// Structural validation of a flow category. Violations are returned as data
// (never thrown): grading gaps of moduli keys, boundary coherence of interval
// endpoints against broken flows, the opposite-endpoint-sign invariant, and
// an independent d∘d = 0 check over the integers.

#include <string>
#include <vector>

#include "flowcat/category.hpp"
#include "flowcat/errors.hpp"

namespace flowcat {

struct Violation {
  Code code;
  std::string message;  // names the offending moduli and component ids
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FlowCategory& cat);

}  // namespace flowcat
