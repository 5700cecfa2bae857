#include "flowcat/script.hpp"

#include <sstream>

#include "line_parser.hpp"

namespace flowcat {

namespace {

using detail::LineParser;
using detail::Token;
using detail::tokenize;

int take_sign(LineParser& lp) {
  const Token& t = lp.take("'+' or '-'");
  if (t.text == "+") return +1;
  if (t.text == "-") return -1;
  lp.fail("expected '+' or '-', got '" + t.text + "'", t.col);
}

}  // namespace

std::vector<ScriptEntry> parse_script(const std::string& text) {
  std::vector<ScriptEntry> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    LineParser lp{lineno, toks};
    const Token& head = lp.take("move");
    if (head.text == "slide") {
      SlideMove m;
      m.x = lp.take_id("object id");
      lp.expect_literal("over");
      m.y = lp.take_id("object id");
      m.sigma = take_sign(lp);
      lp.expect_end();
      out.push_back({m, lineno});
    } else if (head.text == "whitney") {
      WhitneyMove m;
      m.x = lp.take_id("upper object id");
      m.y = lp.take_id("lower object id");
      m.pos = lp.take_id("positive point id");
      m.neg = lp.take_id("negative point id");
      lp.expect_end();
      out.push_back({m, lineno});
    } else if (head.text == "normalize") {
      NormalizeMove m;
      m.a = lp.take_id("upper object id");
      m.b = lp.take_id("lower object id");
      lp.expect_end();
      out.push_back({m, lineno});
    } else if (head.text == "intermediate") {
      IntermediateMove m;
      m.x = lp.take_id("object id");
      m.y = lp.take_id("object id");
      m.sigma = take_sign(lp);
      lp.expect_end();
      out.push_back({m, lineno});
    } else if (head.text == "cancel") {
      CancelMove m;
      m.u = lp.take_id("upper object id");
      m.l = lp.take_id("lower object id");
      lp.expect_end();
      out.push_back({m, lineno});
    } else if (head.text == "birth") {
      BirthMove m;
      m.u = lp.take_id("upper object id");
      m.l = lp.take_id("lower object id");
      m.grading = lp.take_int("grading");
      lp.expect_end();
      out.push_back({m, lineno});
    } else {
      lp.fail("unknown move '" + head.text + "'", head.col);
    }
  }
  return out;
}

std::string move_line(const Move& move) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SlideMove>)
          out << "slide " << m.x << " over " << m.y << " " << (m.sigma > 0 ? "+" : "-");
        else if constexpr (std::is_same_v<T, WhitneyMove>)
          out << "whitney " << m.x << " " << m.y << " " << m.pos << " " << m.neg;
        else if constexpr (std::is_same_v<T, NormalizeMove>)
          out << "normalize " << m.a << " " << m.b;
        else if constexpr (std::is_same_v<T, IntermediateMove>)
          out << "intermediate " << m.x << " " << m.y << " " << (m.sigma > 0 ? "+" : "-");
        else if constexpr (std::is_same_v<T, CancelMove>)
          out << "cancel " << m.u << " " << m.l;
        else
          out << "birth " << m.u << " " << m.l << " " << m.grading;
      },
      move);
  return out.str();
}

std::string serialize_script(const std::vector<Move>& moves) {
  std::string out;
  for (const Move& m : moves) {
    out += move_line(m);
    out += "\n";
  }
  return out;
}

}  // namespace flowcat
