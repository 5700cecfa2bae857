#pragma once

#include <string>
#include <vector>

#include "flowcat/category.hpp"
#include "flowcat/moves.hpp"

namespace flowcat::examples {

// Built-in example names, in presentation order: five categories
// ("trefoil3-q21-c1" .. "trefoil3-q21-c5") followed by the four move scripts
// ("c1-to-c2" .. "c4-to-c5") that connect them.
std::vector<std::string> names();

bool is_category_name(const std::string& name);
bool is_script_name(const std::string& name);

// The named category. c1 is built-in data; c2..c5 are produced by applying
// the shipped scripts in sequence, so they are exactly what `apply` yields.
FlowCategory category(const std::string& name);

// The named script, parsed.
std::vector<Move> script(const std::string& name);

// Printable form: canonical serialization for categories, script text for
// scripts. Deterministic byte-for-byte.
std::string text(const std::string& name);

}  // namespace flowcat::examples
