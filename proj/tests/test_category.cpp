#include <doctest.h>

#include "flowcat/category.hpp"
#include "flowcat/errors.hpp"
#include "flowcat/examples.hpp"

using flowcat::FlowCategory;
using flowcat::MoveError;
using flowcat::SignedPoint;

TEST_CASE("object accessors and ordering") {
  FlowCategory cat;
  cat.add_object("m", 1);
  cat.add_object("a", 2);
  cat.add_object("z", 2);
  cat.add_object("b", 0);
  CHECK(cat.grading("a") == 2);
  CHECK_THROWS_AS((void)cat.grading("missing"), MoveError);
  CHECK(cat.objects_by_grading() ==
        std::vector<std::string>{"a", "z", "m", "b"});
  CHECK(cat.objects_at(2) == std::vector<std::string>{"a", "z"});
  CHECK(cat.objects_at(7).empty());
  CHECK(cat.min_grading() == 0);
  CHECK(cat.max_grading() == 2);
  CHECK_FALSE(FlowCategory{}.min_grading().has_value());
}

TEST_CASE("duplicate ids are rejected by the mutation helpers") {
  FlowCategory cat;
  cat.add_object("a", 1);
  CHECK_THROWS_AS(cat.add_object("a", 3), MoveError);
  cat.add_object("b", 0);
  cat.add_point("a", "b", SignedPoint{"p", +1});
  CHECK_THROWS_AS(cat.add_point("a", "b", SignedPoint{"p", -1}), MoveError);
}

TEST_CASE("points are kept sorted by id within a moduli space") {
  FlowCategory cat;
  cat.add_object("a", 1);
  cat.add_object("b", 0);
  cat.add_point("a", "b", SignedPoint{"zz", +1});
  cat.add_point("a", "b", SignedPoint{"aa", -1});
  const flowcat::ZeroModuli* m = cat.zero("a", "b");
  REQUIRE(m != nullptr);
  REQUIRE(m->points.size() == 2);
  CHECK(m->points[0].id == "aa");
  CHECK(m->points[1].id == "zz");
}

TEST_CASE("fresh ids append _c until unused") {
  FlowCategory cat;
  cat.add_object("x", 1);
  CHECK(cat.fresh_object_id("y") == "y");
  CHECK(cat.fresh_object_id("x") == "x_c");
  cat.add_object("x_c", 1);
  CHECK(cat.fresh_object_id("x") == "x_c_c");

  cat.add_object("b", 0);
  cat.add_point("x", "b", SignedPoint{"p", +1});
  CHECK(cat.fresh_point_id("x", "b", "p") == "p_c");
  CHECK(cat.fresh_point_id("x", "b", "q") == "q");
  CHECK(cat.fresh_point_id("x_c", "b", "p") == "p");  // scoped per moduli
}

TEST_CASE("removing an object removes every moduli space involving it") {
  FlowCategory cat;
  cat.add_object("a", 1);
  cat.add_object("b", 0);
  cat.add_object("c", 0);
  cat.add_point("a", "b", SignedPoint{"p", +1});
  cat.add_point("a", "c", SignedPoint{"q", +1});
  cat.remove_object("b");
  CHECK(cat.zero("a", "b") == nullptr);
  CHECK(cat.zero("a", "c") != nullptr);
  CHECK_FALSE(cat.has_object("b"));
}

TEST_CASE("digest is stable, id-sensitive, and data-sensitive") {
  FlowCategory c1 = flowcat::examples::category("trefoil3-q21-c1");
  CHECK(flowcat::digest(c1) == flowcat::digest(c1));
  FlowCategory tweaked = c1;
  tweaked.remove_point("233", "223", "P0");
  tweaked.add_point("233", "223", SignedPoint{"P0", -1});
  CHECK(flowcat::digest(tweaked) != flowcat::digest(c1));
  CHECK(flowcat::digest(FlowCategory{}) != flowcat::digest(c1));
}

TEST_CASE("prune drops empty moduli entries so equality is semantic") {
  FlowCategory a;
  a.add_object("x", 1);
  a.add_object("y", 0);
  a.add_point("x", "y", SignedPoint{"p", +1});
  FlowCategory b = a;
  b.remove_point("x", "y", "p");
  b.prune_empty_moduli();
  FlowCategory c;
  c.add_object("x", 1);
  c.add_object("y", 0);
  CHECK(b == c);
}
