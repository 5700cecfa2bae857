#pragma once

// Connected components of the moduli-incidence graph: two objects are
// adjacent when some moduli space between them is non-empty.

#include <string>
#include <vector>

#include "flowcat/category.hpp"

namespace flowcat {

// Each component is a sorted list of object ids; components are sorted by
// their smallest member.
std::vector<std::vector<std::string>> components(const FlowCategory& cat);

}  // namespace flowcat
