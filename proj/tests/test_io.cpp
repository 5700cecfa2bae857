#include <doctest.h>

#include <string>

#include "flowcat/errors.hpp"
#include "flowcat/examples.hpp"
#include "flowcat/io.hpp"

using flowcat::Code;
using flowcat::FlowCategory;
using flowcat::ParseError;
using flowcat::parse;
using flowcat::serialize;

TEST_CASE("serialize then parse is the identity on the worked examples") {
  for (const auto& name : flowcat::examples::names()) {
    if (!flowcat::examples::is_category_name(name)) continue;
    FlowCategory cat = flowcat::examples::category(name);
    std::string text = serialize(cat);
    FlowCategory back = parse(text);
    CHECK(back == cat);
    CHECK(serialize(back) == text);  // canonical form is a fixpoint
  }
}

TEST_CASE("empty category round trip") {
  FlowCategory empty;
  std::string text = serialize(empty);
  CHECK(text == "flowcat v1\n");
  CHECK(parse(text) == empty);
}

TEST_CASE("parsing tolerates comments, blank lines, and free declaration order") {
  const char* text =
      "flowcat v1\n"
      "# a comment\n"
      "\n"
      "object b 0\n"
      "object a 1   # trailing comment\n"
      "points a b : p+ q-\n";
  FlowCategory cat = parse(text);
  CHECK(cat.objects().size() == 2);
  CHECK(cat.grading("a") == 1);
  const flowcat::ZeroModuli* m = cat.zero("a", "b");
  REQUIRE(m != nullptr);
  REQUIRE(m->points.size() == 2);
  CHECK(m->points[0].id == "p");
  CHECK(m->points[0].sign == 1);
  CHECK(m->points[1].id == "q");
  CHECK(m->points[1].sign == -1);
}

TEST_CASE("interval and circle lines parse into canonical component order") {
  const char* text =
      "flowcat v1\n"
      "object a 2\n"
      "object v 1\n"
      "object w 1\n"
      "object b 0\n"
      "points v b : s+\n"
      "points a v : t+\n"
      "points w b : u-\n"
      "points a w : x+\n"
      "circle a b k label=1\n"
      "interval a b I fr=1 end=(v;s;t) end=(w;u;x)\n";
  FlowCategory cat = parse(text);
  const flowcat::OneModuli* m = cat.one("a", "b");
  REQUIRE(m != nullptr);
  REQUIRE(m->intervals.size() == 1);
  CHECK(m->intervals[0].fr == 1);
  CHECK(m->intervals[0].end1.via == "v");  // ends stored sorted
  CHECK(m->intervals[0].end2.via == "w");
  REQUIRE(m->circles.size() == 1);
  CHECK(m->circles[0].label == 1);
  // round trip through the canonical form
  CHECK(parse(serialize(cat)) == cat);
}

TEST_CASE("parse errors carry E_PARSE with 1-based positions") {
  auto expect_parse_error = [](const char* text, int line) {
    try {
      parse(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.code == Code::E_PARSE);
      CHECK(e.line == line);
    }
  };
  expect_parse_error("", 1);                                   // missing header
  expect_parse_error("flowcat v2\n", 1);                       // wrong version
  expect_parse_error("flowcat v1\nobject\n", 2);               // missing fields
  expect_parse_error("flowcat v1\nobject a x\n", 2);           // bad grading
  expect_parse_error("flowcat v1\nobject a 1\nobject a 1\n", 3);  // duplicate
  expect_parse_error("flowcat v1\nwibble a b\n", 2);           // unknown verb
  expect_parse_error("flowcat v1\nobject a 1\nobject b 0\npoints a b : p*\n", 4);
  expect_parse_error(
      "flowcat v1\nobject a 1\nobject b 0\npoints a b : p+ p-\n", 4);  // dup id
  expect_parse_error("flowcat v1\npoints a b : p+\n", 2);  // unknown object
}

TEST_CASE("grading-gap violations in the text are E_GRADING parse errors") {
  try {
    parse("flowcat v1\nobject a 2\nobject b 0\npoints a b : p+\n");
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.code == Code::E_GRADING);
    CHECK(e.line == 4);
  }
  try {
    parse("flowcat v1\nobject a 1\nobject b 0\ncircle a b k label=0\n");
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.code == Code::E_GRADING);
  }
}

TEST_CASE("serialization is canonical: objects by grading desc then id") {
  FlowCategory cat;
  cat.add_object("zz", 0);
  cat.add_object("aa", 2);
  cat.add_object("mm", 2);
  std::string text = serialize(cat);
  std::size_t aa = text.find("object aa 2");
  std::size_t mm = text.find("object mm 2");
  std::size_t zz = text.find("object zz 0");
  REQUIRE(aa != std::string::npos);
  REQUIRE(mm != std::string::npos);
  REQUIRE(zz != std::string::npos);
  CHECK(aa < mm);
  CHECK(mm < zz);
}
