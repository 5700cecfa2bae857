#include "flowcat/examples.hpp"

#include <map>
#include <stdexcept>

#include "flowcat/io.hpp"
#include "flowcat/script.hpp"

namespace flowcat::examples {

namespace {

// The starting category: eight objects in gradings 9..6, twelve two-point
// moduli spaces, and six four-interval moduli spaces whose endpoints pair the
// broken flows in the crossed pattern (lower_i upper_j) -- (lower'_j upper'_i).
// Point ids follow the source figure: s* for the top-grading flows, t*/b* for
// the tilde/bar families, capital letters one step down, lowercase at the
// bottom; *P* points are positive and *M*/m points negative.
FlowCategory make_c1() {
  FlowCategory c;
  c.add_object("333", 9);
  c.add_object("233", 8);
  c.add_object("323", 8);
  c.add_object("332", 8);
  c.add_object("223", 7);
  c.add_object("232", 7);
  c.add_object("322", 7);
  c.add_object("222", 6);

  auto pts = [&c](const std::string& u, const std::string& l,
                  const std::string& id0, const std::string& id1, int sign) {
    c.add_point(u, l, SignedPoint{id0, sign});
    c.add_point(u, l, SignedPoint{id1, sign});
  };
  pts("333", "233", "sP0", "sP1", +1);
  pts("333", "323", "sM0", "sM1", -1);
  pts("333", "332", "tsP0", "tsP1", +1);
  pts("233", "223", "P0", "P1", +1);
  pts("233", "232", "M0", "M1", -1);
  pts("323", "223", "tP0", "tP1", +1);
  pts("323", "322", "tM0", "tM1", -1);
  pts("332", "232", "bP0", "bP1", +1);
  pts("332", "322", "bM0", "bM1", -1);
  pts("223", "222", "p0", "p1", +1);
  pts("232", "222", "tp0", "tp1", +1);
  pts("322", "222", "bp0", "bp1", +1);

  // Four fr-0 intervals per 1-dimensional moduli space. Via objects v1/v2 and
  // their flow families: ends (v1; lo1_i; up1_j) -- (v2; lo2_j; up2_i).
  auto cross = [&c](const std::string& a, const std::string& b,
                    const std::string& v1, const std::string& lo1,
                    const std::string& up1, const std::string& v2,
                    const std::string& lo2, const std::string& up2) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const std::string si = std::to_string(i), sj = std::to_string(j);
        Interval iv;
        iv.id = lo1 + si + up1 + sj;
        iv.fr = 0;
        iv.end1 = BrokenFlow{v1, lo1 + si, up1 + sj};
        iv.end2 = BrokenFlow{v2, lo2 + sj, up2 + si};
        c.add_interval(a, b, iv);
      }
    }
  };
  cross("333", "223", "233", "P", "sP", "323", "tP", "sM");
  cross("333", "232", "233", "M", "sP", "332", "bP", "tsP");
  cross("333", "322", "323", "tM", "sM", "332", "bM", "tsP");
  cross("233", "222", "223", "p", "P", "232", "tp", "M");
  cross("323", "222", "223", "p", "tP", "322", "bp", "tM");
  cross("332", "222", "232", "tp", "bP", "322", "bp", "bM");
  return c;
}

// The four move scripts. Where the source derivation says "perform all
// obvious Whitney tricks", the cancellations are enumerated explicitly:
// mixed-sign moduli spaces in lexicographic (upper, lower) order, positive
// points paired with negative points in lexicographic id order; circle
// normalizations likewise in lexicographic key order.
const char* kC1toC2 =
    "# Collapse the 223 column into 232 and clean up.\n"
    "slide 223 over 232 -\n"
    "whitney 223 222 p0 tp0_c\n"
    "whitney 223 222 p1 tp1_c\n"
    "whitney 233 232 P0_c M0\n"
    "whitney 233 232 P1_c M1\n"
    "normalize 233 222\n";

const char* kC2toC3 =
    "# Collapse the 322 column into 232 and clean up.\n"
    "slide 322 over 232 -\n"
    "whitney 322 222 bp0 tp0_c\n"
    "whitney 322 222 bp1 tp1_c\n"
    "whitney 323 232 tP0_c tM0_c\n"
    "whitney 323 232 tP1_c tM1_c\n"
    "whitney 332 232 bP0 bM0_c\n"
    "whitney 332 232 bP1 bM1_c\n"
    "normalize 323 222\n"
    "normalize 332 222\n"
    "normalize 333 232\n";

const char* kC3toC4 =
    "# Empty the 323 row against 233 and 332.\n"
    "slide 323 over 233 -\n"
    "slide 323 over 332 -\n"
    "whitney 323 223 tP0 P0_c\n"
    "whitney 323 223 tP1 P1_c\n"
    "whitney 323 322 bM0_c tM0\n"
    "whitney 323 322 bM1_c tM1\n"
    "whitney 333 233 sP0 sM0_c\n"
    "whitney 333 233 sP1 sM1_c\n"
    "whitney 333 332 tsP0 sM0_c\n"
    "whitney 333 332 tsP1 sM1_c\n"
    "normalize 323 222\n"
    "normalize 333 223\n"
    "normalize 333 322\n";

const char* kC4toC5 =
    "# Cancel the leftover circles pairwise by sliding them together.\n"
    "slide 332 over 323 -\n"
    "slide 233 over 323 -\n"
    "slide 232 over 223 -\n"
    "slide 232 over 322 -\n"
    "normalize 233 222\n"
    "normalize 332 222\n"
    "normalize 333 223\n"
    "normalize 333 322\n";

const std::map<std::string, const char*>& script_texts() {
  static const std::map<std::string, const char*> m = {
      {"c1-to-c2", kC1toC2},
      {"c2-to-c3", kC2toC3},
      {"c3-to-c4", kC3toC4},
      {"c4-to-c5", kC4toC5},
  };
  return m;
}

const std::map<std::string, FlowCategory>& categories() {
  static const std::map<std::string, FlowCategory> m = [] {
    std::map<std::string, FlowCategory> out;
    FlowCategory cur = make_c1();
    out["trefoil3-q21-c1"] = cur;
    const char* steps[4] = {kC1toC2, kC2toC3, kC3toC4, kC4toC5};
    for (int k = 0; k < 4; ++k) {
      for (const ScriptEntry& e : parse_script(steps[k]))
        cur = apply_move(cur, e.move);
      out["trefoil3-q21-c" + std::to_string(k + 2)] = cur;
    }
    return out;
  }();
  return m;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (int k = 1; k <= 5; ++k) out.push_back("trefoil3-q21-c" + std::to_string(k));
  for (const auto& [name, _] : script_texts()) out.push_back(name);
  return out;
}

bool is_category_name(const std::string& name) {
  return categories().count(name) > 0;
}

bool is_script_name(const std::string& name) {
  return script_texts().count(name) > 0;
}

FlowCategory category(const std::string& name) {
  auto it = categories().find(name);
  if (it == categories().end())
    throw std::out_of_range("unknown example category: " + name);
  return it->second;
}

std::vector<Move> script(const std::string& name) {
  auto it = script_texts().find(name);
  if (it == script_texts().end())
    throw std::out_of_range("unknown example script: " + name);
  std::vector<Move> moves;
  for (const ScriptEntry& e : parse_script(it->second)) moves.push_back(e.move);
  return moves;
}

std::string text(const std::string& name) {
  if (is_script_name(name)) return script_texts().at(name);
  return serialize(category(name));
}

}  // namespace flowcat::examples
