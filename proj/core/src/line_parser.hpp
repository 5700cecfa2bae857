// Internal line-oriented tokenizer shared by the category and script parsers.
// Not installed.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "flowcat/errors.hpp"

namespace flowcat::detail {

struct Token {
  std::string text;
  int col;  // 1-based column of the first character
};

// Splits one line (comment already stripped) into whitespace-separated tokens.
inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

inline bool is_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline bool is_integer(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

struct LineParser {
  int line;
  const std::vector<Token>& toks;
  size_t next = 0;

  [[noreturn]] void fail(const std::string& msg, int col, Code code = Code::E_PARSE) {
    throw ParseError(line, col, msg, code);
  }

  const Token& take(const std::string& what) {
    if (next >= toks.size())
      fail("expected " + what,
           toks.empty() ? 1 : toks.back().col + static_cast<int>(toks.back().text.size()));
    return toks[next++];
  }

  std::string take_id(const std::string& what) {
    const Token& t = take(what);
    if (!is_id(t.text)) fail("expected " + what + ", got '" + t.text + "'", t.col);
    return t.text;
  }

  int take_int(const std::string& what) {
    const Token& t = take(what);
    if (!is_integer(t.text)) fail("expected " + what + ", got '" + t.text + "'", t.col);
    return std::stoi(t.text);
  }

  void expect_literal(const std::string& lit) {
    const Token& t = take("'" + lit + "'");
    if (t.text != lit) fail("expected '" + lit + "', got '" + t.text + "'", t.col);
  }

  void expect_end() {
    if (next < toks.size())
      fail("unexpected trailing token '" + toks[next].text + "'", toks[next].col);
  }
};

}  // namespace flowcat::detail
