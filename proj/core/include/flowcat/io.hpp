#pragma once

// Text format for flow categories (line-oriented, `#` comments):
//
//   flowcat v1
//   object <id> <grading>
//   points <upper-id> <lower-id> : <pt-id>+ <pt-id>- ...
//   interval <upper-id> <lower-id> <int-id> fr=<0|1> end=(<via>;<lower-pt>;<upper-pt>) end=(<via>;<lower-pt>;<upper-pt>)
//   circle <upper-id> <lower-id> <circ-id> label=<0|1>
//
// Tokens are [A-Za-z0-9_]+; declaration order is free except that objects
// must precede their moduli. serialize() emits the canonical form: objects
// by (grading descending, id ascending), then moduli lexicographically by
// (upper, lower), components sorted by id — byte-identical for equal inputs.

#include <string>

#include "flowcat/category.hpp"
#include "flowcat/errors.hpp"

namespace flowcat {

FlowCategory parse(const std::string& text);  // throws ParseError
std::string serialize(const FlowCategory& cat);

}  // namespace flowcat
