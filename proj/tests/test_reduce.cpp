#include <doctest.h>

#include <map>
#include <set>

#include "flowcat/chain.hpp"
#include "flowcat/examples.hpp"
#include "flowcat/homology.hpp"
#include "flowcat/moves.hpp"
#include "flowcat/reduce.hpp"
#include "flowcat/validate.hpp"
#include "helpers.hpp"

using flowcat::ChainComplex;
using flowcat::FlowCategory;
using flowcat::Int;
using flowcat::ReduceResult;
using flowcat::chain_complex;
using flowcat::homology_Z;
using flowcat::primary_snf_reduce;
using flowcat::purify_signs;
using flowcat::snf_reduce;
using testutil::nonzero_entries;

namespace {

FlowCategory base() { return flowcat::examples::category("trefoil3-q21-c1"); }

bool single_signed(const FlowCategory& cat) {
  for (const auto& [key, m] : cat.zero_moduli()) {
    bool pos = false, neg = false;
    for (const auto& p : m.points) (p.sign > 0 ? pos : neg) = true;
    if (pos && neg) return false;
  }
  return true;
}

// every two-point moduli space has exactly |chain entry| points
bool point_counts_match_entries(const FlowCategory& cat) {
  ChainComplex cc = chain_complex(cat);
  for (const auto& [key, m] : cat.zero_moduli()) {
    Int e = testutil::entry(cc, cat.grading(key.upper), key.lower, key.upper);
    if (Int(m.points.size()) != abs(e)) return false;
  }
  return true;
}

bool is_prime_power(Int d) {
  if (d < 2) return false;
  for (Int p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      return d == 1;
    }
  return true;  // prime
}

}  // namespace

TEST_CASE("purify_signs cancels mixed pairs moduli by moduli") {
  FlowCategory cat;
  cat.add_object("u", 1);
  cat.add_object("l", 0);
  cat.add_point("u", "l", flowcat::SignedPoint{"a", +1});
  cat.add_point("u", "l", flowcat::SignedPoint{"b", -1});
  cat.add_point("u", "l", flowcat::SignedPoint{"c", +1});
  ReduceResult res = purify_signs(cat);
  CHECK(flowcat::validate(res.category).ok());
  CHECK(single_signed(res.category));
  const flowcat::ZeroModuli* m = res.category.zero("u", "l");
  REQUIRE(m != nullptr);
  REQUIRE(m->points.size() == 1);
  CHECK(m->points[0].sign == +1);
  CHECK(res.log.entries.size() == 1);  // one whitney cancellation
  CHECK(flowcat::replay(cat, res.log) == res.category);
}

TEST_CASE("purify_signs is the identity on already-pure categories") {
  ReduceResult res = purify_signs(base());
  CHECK(res.log.entries.empty());
  CHECK(res.category == base());
}

TEST_CASE("snf_reduce drives the example tower to positive diagonal blocks") {
  FlowCategory c1 = base();
  ReduceResult res = snf_reduce(c1);
  CHECK(flowcat::validate(res.category).ok());
  CHECK(single_signed(res.category));
  CHECK(point_counts_match_entries(res.category));

  ChainComplex cc = chain_complex(res.category);
  for (const auto& [g, M] : cc.step) CHECK(testutil::is_diagonalish(M));
  auto entries = nonzero_entries(cc);
  CHECK(entries[7] == std::multiset<std::string>{"2"});
  CHECK(entries[8] == std::multiset<std::string>{"2", "2"});
  CHECK(entries[9] == std::multiset<std::string>{"2"});

  CHECK(homology_Z(cc) == homology_Z(chain_complex(c1)));
  CHECK(flowcat::replay(c1, res.log) == res.category);
}

TEST_CASE("snf_reduce normalizes the already-diagonal example's signs") {
  FlowCategory c4 = flowcat::examples::category("trefoil3-q21-c4");
  ReduceResult res = snf_reduce(c4);
  ChainComplex cc = chain_complex(res.category);
  auto entries = nonzero_entries(cc);
  CHECK(entries[7] == std::multiset<std::string>{"2"});
  CHECK(entries[8] == std::multiset<std::string>{"2", "2"});
  CHECK(entries[9] == std::multiset<std::string>{"2"});
  CHECK(homology_Z(cc) == homology_Z(chain_complex(c4)));
}

TEST_CASE("snf_reduce folds non-dividing diagonal entries") {
  FlowCategory cat;
  cat.add_object("ua", 1);
  cat.add_object("la", 0);
  cat.add_object("ub", 1);
  cat.add_object("lb", 0);
  for (int i = 0; i < 4; ++i)
    cat.add_point("ua", "la", flowcat::SignedPoint{"q" + std::to_string(i), +1});
  for (int i = 0; i < 6; ++i)
    cat.add_point("ub", "lb", flowcat::SignedPoint{"q" + std::to_string(i), +1});
  ReduceResult res = snf_reduce(cat);
  auto entries = nonzero_entries(chain_complex(res.category));
  // invariant factors 2 | 12 up to sign
  std::multiset<std::string> abs_entries;
  for (const auto& s : entries[1])
    abs_entries.insert(s[0] == '-' ? s.substr(1) : s);
  CHECK(abs_entries == std::multiset<std::string>{"12", "2"});
  CHECK(homology_Z(chain_complex(res.category)) ==
        homology_Z(chain_complex(cat)));
  CHECK(flowcat::replay(cat, res.log) == res.category);
}

TEST_CASE("primary reduction splits composite entries into prime powers") {
  for (int n : {6, 12}) {
    FlowCategory cat = testutil::piece("u", "l", n, +1);
    ReduceResult res = primary_snf_reduce(cat);
    CHECK(flowcat::validate(res.category).ok());
    CHECK(single_signed(res.category));
    CHECK(point_counts_match_entries(res.category));
    ChainComplex cc = chain_complex(res.category);
    for (const auto& [g, M] : cc.step) {
      CHECK(testutil::is_diagonalish(M));
      for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c)
          if (M.at(r, c) != 0) CHECK(is_prime_power(M.at(r, c)));
    }
    CHECK(homology_Z(cc) == homology_Z(chain_complex(cat)));
    CHECK(flowcat::replay(cat, res.log) == res.category);
  }
}

TEST_CASE("primary reduction cancels unit entries away") {
  FlowCategory cat = testutil::piece("u", "l", 1, +1);
  ReduceResult res = primary_snf_reduce(cat);
  CHECK(res.category.objects().empty());
  REQUIRE(res.log.entries.size() == 1);
  CHECK(std::get_if<flowcat::CancelMove>(&res.log.entries[0].move) != nullptr);
}

TEST_CASE("primary reduction makes isolated negative entries positive") {
  FlowCategory cat = testutil::piece("u", "l", 2, -1);
  ReduceResult res = primary_snf_reduce(cat);
  CHECK(flowcat::validate(res.category).ok());
  auto entries = nonzero_entries(chain_complex(res.category));
  CHECK(entries[1] == std::multiset<std::string>{"2"});
  CHECK(homology_Z(chain_complex(res.category)) ==
        homology_Z(chain_complex(cat)));
  CHECK(flowcat::replay(cat, res.log) == res.category);
}

TEST_CASE("primary reduction of the example tower keeps its diagonal blocks") {
  ReduceResult res = primary_snf_reduce(base());
  auto entries = nonzero_entries(chain_complex(res.category));
  CHECK(entries[7] == std::multiset<std::string>{"2"});
  CHECK(entries[8] == std::multiset<std::string>{"2", "2"});
  CHECK(entries[9] == std::multiset<std::string>{"2"});
  CHECK(single_signed(res.category));
  CHECK(point_counts_match_entries(res.category));
}

TEST_CASE("reduction leaves zero differentials alone") {
  FlowCategory cat = testutil::piece("u", "l", 0, +1);
  CHECK(snf_reduce(cat).log.entries.empty());
  CHECK(primary_snf_reduce(cat).log.entries.empty());
}
