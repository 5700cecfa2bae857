// Text form of move sequences: one move per line, '#' comments, blank lines
// ignored.
//
//   slide <x> over <y> <+|->
//   whitney <x> <y> <pos-pt> <neg-pt>
//   normalize <a> <b>
//   intermediate <x> <y> <+|->
//   cancel <u> <l>
//   birth <u> <l> <grading>
#pragma once

#include <string>
#include <vector>

#include "flowcat/moves.hpp"

namespace flowcat {

struct ScriptEntry {
  Move move;
  int line = 0;  // 1-based source line, for error reporting
};

// Parses a move script; throws ParseError on malformed input.
std::vector<ScriptEntry> parse_script(const std::string& text);

// Renders a single move as one script line (no trailing newline).
std::string move_line(const Move& move);

// Renders a move sequence as a script, one line per move.
std::string serialize_script(const std::vector<Move>& moves);

}  // namespace flowcat
