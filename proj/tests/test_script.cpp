#include <doctest.h>

#include <variant>

#include "flowcat/errors.hpp"
#include "flowcat/script.hpp"

using flowcat::Move;
using flowcat::ParseError;
using flowcat::ScriptEntry;
using flowcat::parse_script;

TEST_CASE("script lines parse into moves with 1-based line numbers") {
  const char* text =
      "# setup\n"
      "slide a over b -\n"
      "\n"
      "whitney x y p q\n"
      "normalize m n\n"
      "intermediate a b +\n"
      "cancel u l\n"
      "birth u2 l2 -3\n";
  std::vector<ScriptEntry> script = parse_script(text);
  REQUIRE(script.size() == 6);
  CHECK(script[0].line == 2);
  CHECK(script[1].line == 4);
  CHECK(script[5].line == 8);

  auto* slide = std::get_if<flowcat::SlideMove>(&script[0].move);
  REQUIRE(slide != nullptr);
  CHECK(slide->x == "a");
  CHECK(slide->y == "b");
  CHECK(slide->sigma == -1);

  auto* whitney = std::get_if<flowcat::WhitneyMove>(&script[1].move);
  REQUIRE(whitney != nullptr);
  CHECK(whitney->pos == "p");
  CHECK(whitney->neg == "q");

  auto* birth = std::get_if<flowcat::BirthMove>(&script[5].move);
  REQUIRE(birth != nullptr);
  CHECK(birth->grading == -3);
}

TEST_CASE("script serialization round-trips") {
  std::vector<Move> moves = {
      flowcat::SlideMove{"a", "b", +1},
      flowcat::WhitneyMove{"x", "y", "p", "q"},
      flowcat::NormalizeMove{"m", "n"},
      flowcat::IntermediateMove{"a", "b", -1},
      flowcat::CancelMove{"u", "l"},
      flowcat::BirthMove{"u2", "l2", 7},
  };
  std::string text = flowcat::serialize_script(moves);
  std::vector<ScriptEntry> back = parse_script(text);
  REQUIRE(back.size() == moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) CHECK(back[i].move == moves[i]);
  CHECK(flowcat::move_line(moves[0]) == "slide a over b +");
  CHECK(flowcat::move_line(moves[1]) == "whitney x y p q");
}

TEST_CASE("malformed script lines are parse errors with the offending line") {
  auto expect_error = [](const char* text, int line) {
    try {
      parse_script(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("slide a b -\n", 1);            // missing 'over'
  expect_error("slide a over b *\n", 1);       // bad sign
  expect_error("whitney x y p\n", 1);          // missing argument
  expect_error("# ok\nteleport a b\n", 2);     // unknown verb
  expect_error("birth u l x\n", 1);            // bad grading
  expect_error("slide a over b - extra\n", 1); // trailing tokens
}

TEST_CASE("empty scripts are fine") {
  CHECK(parse_script("").empty());
  CHECK(parse_script("# only comments\n\n").empty());
}
