#pragma once

#include <stdexcept>
#include <string>

namespace flowcat {

// Violation / move-rejection codes shared by parsing, validation and the move
// engine. Validation reports them as data; moves throw them as MoveError.
enum class Code {
  E_PARSE,
  E_GRADING,
  E_SELF,
  E_NOT_CANCELLABLE,
  E_SIGNS,
  E_NOT_SAME_MODULI,
  E_DUPLICATE_ID,
  E_DANGLING_ENDPOINT,
  E_ENDPOINT_SIGN,
  E_NOT_COMPLEX,
  E_UNKNOWN_OBJECT,
  E_UNKNOWN_COMPONENT,
};

std::string code_name(Code c);

// Thrown when reading a category file or move script fails. Positions are
// 1-based. Grading violations in the input text carry Code::E_GRADING;
// everything lexical/structural is Code::E_PARSE.
struct ParseError : std::runtime_error {
  Code code;
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& what_,
             Code code_ = Code::E_PARSE)
      : std::runtime_error(code_name(code_) + " at " + std::to_string(line_) +
                           ":" + std::to_string(col_) + ": " + what_),
        code(code_),
        line(line_),
        col(col_) {}
};

// Thrown when a move's preconditions are not met.
struct MoveError : std::runtime_error {
  Code code;
  MoveError(Code code_, const std::string& what_)
      : std::runtime_error(code_name(code_) + ": " + what_), code(code_) {}
};

}  // namespace flowcat
