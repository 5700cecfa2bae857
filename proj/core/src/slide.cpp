#include <map>

#include "flowcat/moves.hpp"

namespace flowcat {

FlowCategory handle_slide(const FlowCategory& cat, const std::string& x,
                          const std::string& y, int sigma) {
  if (x == y) throw MoveError(Code::E_SELF, "cannot slide '" + x + "' over itself");
  const int gx = cat.grading(x);
  const int gy = cat.grading(y);
  if (gx != gy)
    throw MoveError(Code::E_GRADING, "slide requires equal gradings, got |" + x +
                                         "| = " + std::to_string(gx) + ", |" + y +
                                         "| = " + std::to_string(gy));
  FlowCategory out = cat;

  // Phase A: 0-dimensional copies, recording the copy-name maps that the
  // 1-dimensional re-pointing below depends on.
  //
  // to_x[b]: id in M(y,b) -> copy id in M(x,b), for b one grading down.
  // to_y[a]: id in M(a,x) -> copy id in M(a,y), for a one grading up.
  std::map<std::string, std::map<std::string, std::string>> to_x, to_y;

  for (const auto& [key, m] : cat.zero_moduli()) {
    if (key.upper == y && !m.empty()) {  // M(y,b) -> M(x,b)
      const std::string& b = key.lower;
      for (const SignedPoint& q : m.points) {
        std::string name = out.fresh_point_id(x, b, q.id + "_c");
        out.add_point(x, b, SignedPoint{name, sigma > 0 ? q.sign : -q.sign});
        to_x[b][q.id] = name;
      }
    }
    if (key.lower == x && !m.empty()) {  // M(a,x) -> M(a,y)
      const std::string& a = key.upper;
      for (const SignedPoint& q : m.points) {
        std::string name = out.fresh_point_id(a, y, q.id + "_c");
        out.add_point(a, y, SignedPoint{name, sigma > 0 ? -q.sign : q.sign});
        to_y[a][q.id] = name;
      }
    }
  }

  // Phase B: 1-dimensional copies.
  for (const auto& [key, m] : cat.one_moduli()) {
    if (m.empty()) continue;
    if (key.lower == x) {
      // M(a,x) with |a| = i+2: copy into M(a,y); fr/label shift by 1 for
      // sigma=+; interval lower points re-pointed through to_y of the via
      // object (the copies in M(z,y)).
      const std::string& a = key.upper;
      for (const Interval& iv : m.intervals) {
        Interval copy;
        copy.id = out.fresh_component_id(a, y, iv.id + "_c");
        copy.fr = (iv.fr + (sigma > 0 ? 1 : 0)) % 2;
        copy.end1 = BrokenFlow{iv.end1.via, to_y.at(iv.end1.via).at(iv.end1.lower),
                               iv.end1.upper};
        copy.end2 = BrokenFlow{iv.end2.via, to_y.at(iv.end2.via).at(iv.end2.lower),
                               iv.end2.upper};
        out.add_interval(a, y, copy);
      }
      for (const Circle& c : m.circles)
        out.add_circle(a, y, Circle{out.fresh_component_id(a, y, c.id + "_c"),
                                    (c.label + (sigma > 0 ? 1 : 0)) % 2});
    }
    if (key.upper == y) {
      // M(y,b) with |b| = i-2: copy into M(x,b); fr/label unchanged for both
      // signs; interval upper points re-pointed through to_x of the via
      // object (the copies in M(x,z)).
      const std::string& b = key.lower;
      for (const Interval& iv : m.intervals) {
        Interval copy;
        copy.id = out.fresh_component_id(x, b, iv.id + "_c");
        copy.fr = iv.fr;
        copy.end1 = BrokenFlow{iv.end1.via, iv.end1.lower,
                               to_x.at(iv.end1.via).at(iv.end1.upper)};
        copy.end2 = BrokenFlow{iv.end2.via, iv.end2.lower,
                               to_x.at(iv.end2.via).at(iv.end2.upper)};
        out.add_interval(x, b, copy);
      }
      for (const Circle& c : m.circles)
        out.add_circle(x, b,
                       Circle{out.fresh_component_id(x, b, c.id + "_c"), c.label});
    }
  }

  // Phase C: the new intervals I_{B,A} in M(a,b), one per pair
  // (B,A) in M(y,b) x M(a,x), joining the two families of copies.
  for (const auto& [bkey, bm] : cat.zero_moduli()) {
    if (bkey.upper != y || bm.empty()) continue;
    const std::string& b = bkey.lower;
    for (const auto& [akey, am] : cat.zero_moduli()) {
      if (akey.lower != x || am.empty()) continue;
      const std::string& a = akey.upper;
      for (const SignedPoint& B : bm.points) {
        for (const SignedPoint& A : am.points) {
          Interval iv;
          iv.id = out.fresh_component_id(a, b, "I_" + B.id + "_" + A.id);
          iv.fr = (B.eps() + (sigma > 0 ? 1 : 0)) % 2;
          iv.end1 = BrokenFlow{y, B.id, to_y.at(a).at(A.id)};
          iv.end2 = BrokenFlow{x, to_x.at(b).at(B.id), A.id};
          out.add_interval(a, b, iv);
        }
      }
    }
  }

  return out;
}

}  // namespace flowcat
