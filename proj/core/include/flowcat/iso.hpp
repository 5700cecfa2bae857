#pragma once

// Isomorphism testing: exhaustive search (with invariant pruning) for a
// grading-preserving object bijection together with per-moduli point
// bijections matching signs, interval framings and endpoints, and circle
// labels.

#include <map>
#include <optional>
#include <string>

#include "flowcat/category.hpp"

namespace flowcat {

struct Isomorphism {
  std::map<std::string, std::string> objects;  // id in a -> id in b
  // (upper,lower,point) in a -> point id in b, for points of a incident to
  // at least one interval endpoint (other points are matched sign-for-sign
  // without an individual witness being needed).
  std::map<std::tuple<std::string, std::string, std::string>, std::string> points;
};

std::optional<Isomorphism> iso_check(const FlowCategory& a, const FlowCategory& b);

}  // namespace flowcat
