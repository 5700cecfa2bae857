#include <map>

#include "flowcat/moves.hpp"

namespace flowcat {

FlowCategory intermediate_category(const FlowCategory& cat, const std::string& x,
                                   const std::string& y, int sigma) {
  if (x == y)
    throw MoveError(Code::E_SELF, "intermediate category requires x != y");
  const int gx = cat.grading(x);
  const int gy = cat.grading(y);
  if (gx != gy)
    throw MoveError(Code::E_GRADING,
                    "intermediate category requires equal gradings, got |" + x +
                        "| = " + std::to_string(gx) + ", |" + y +
                        "| = " + std::to_string(gy));
  const int i = gx;
  FlowCategory out = cat;

  const std::string e = out.fresh_object_id("e");
  out.add_object(e, i);
  const std::string f = out.fresh_object_id("f");
  out.add_object(f, i + 1);

  out.add_point(f, x, SignedPoint{"fx", +1});
  out.add_point(f, e, SignedPoint{"fe", -1});
  out.add_point(f, y, SignedPoint{"fy", sigma > 0 ? +1 : -1});

  // M(e,b) = copy of M(x,b) disjoint-union copy of M(y,b), with y-part signs
  // flipped iff sigma=-. Copy-name maps feed the endpoint re-pointing of the
  // 1-dimensional copies and the M(f,b) intervals.
  std::map<std::string, std::map<std::string, std::string>> from_x, from_y;
  for (const auto& [key, m] : cat.zero_moduli()) {
    if (m.empty()) continue;
    if (key.upper == x) {
      const std::string& b = key.lower;
      for (const SignedPoint& p : m.points) {
        std::string name = out.fresh_point_id(e, b, p.id);
        out.add_point(e, b, SignedPoint{name, p.sign});
        from_x[b][p.id] = name;
      }
    }
  }
  for (const auto& [key, m] : cat.zero_moduli()) {
    if (m.empty()) continue;
    if (key.upper == y) {
      const std::string& b = key.lower;
      for (const SignedPoint& q : m.points) {
        std::string name = out.fresh_point_id(e, b, q.id);
        out.add_point(e, b, SignedPoint{name, sigma > 0 ? q.sign : -q.sign});
        from_y[b][q.id] = name;
      }
    }
  }

  // M(f,b) for |b| = i-1: one interval per point of M(e,b), running from the
  // e-copy (through the f->e point) to the original (through f->x or f->y).
  // Intervals over the x-part carry fr 0; over the y-part fr = eps_B for
  // sigma=- and 1+eps_B for sigma=+, with eps_B read off the original point.
  for (const auto& [key, m] : cat.zero_moduli()) {
    if (m.empty()) continue;
    const std::string& b = key.lower;
    if (key.upper == x) {
      for (const SignedPoint& p : m.points) {
        Interval iv;
        iv.id = out.fresh_component_id(f, b, "J_" + from_x.at(b).at(p.id));
        iv.fr = 0;
        iv.end1 = BrokenFlow{e, from_x.at(b).at(p.id), "fe"};
        iv.end2 = BrokenFlow{x, p.id, "fx"};
        out.add_interval(f, b, iv);
      }
    }
    if (key.upper == y) {
      for (const SignedPoint& q : m.points) {
        Interval iv;
        iv.id = out.fresh_component_id(f, b, "J_" + from_y.at(b).at(q.id));
        iv.fr = (q.eps() + (sigma > 0 ? 1 : 0)) % 2;
        iv.end1 = BrokenFlow{e, from_y.at(b).at(q.id), "fe"};
        iv.end2 = BrokenFlow{y, q.id, "fy"};
        out.add_interval(f, b, iv);
      }
    }
  }

  // M(e,c) for |c| = i-2: copies of the 1-dimensional moduli of M(x,c) and
  // M(y,c) with fr/label unchanged, upper endpoint points re-pointed through
  // the copies in M(e,z). The x-part is copied first, matching the 0-dim
  // convention for id collisions.
  auto copy_one_dim = [&](const std::string& source,
                          const std::map<std::string,
                                         std::map<std::string, std::string>>& map) {
    for (const auto& [key, m] : cat.one_moduli()) {
      if (key.upper != source || m.empty()) continue;
      const std::string& c = key.lower;
      for (const Interval& iv : m.intervals) {
        Interval copy;
        copy.id = out.fresh_component_id(e, c, iv.id);
        copy.fr = iv.fr;
        copy.end1 = BrokenFlow{iv.end1.via, iv.end1.lower,
                               map.at(iv.end1.via).at(iv.end1.upper)};
        copy.end2 = BrokenFlow{iv.end2.via, iv.end2.lower,
                               map.at(iv.end2.via).at(iv.end2.upper)};
        out.add_interval(e, c, copy);
      }
      for (const Circle& circ : m.circles)
        out.add_circle(e, c,
                       Circle{out.fresh_component_id(e, c, circ.id), circ.label});
    }
  };
  copy_one_dim(x, from_x);
  copy_one_dim(y, from_y);

  return out;
}

}  // namespace flowcat
