#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "flowcat/moves.hpp"

namespace flowcat {

namespace {

// A piece of a 1-dimensional moduli space under reassembly: an old interval
// or a product band. Ports are the two interval ends; a port is either a
// genuine broken flow of the new category or a gluing site shared with
// exactly one other piece.
struct Port {
  bool free = true;
  BrokenFlow end;   // meaningful when free
  std::string tag;  // meaningful when !free
};

struct Piece {
  std::string id;
  int fr = 0;
  Port ports[2];
};

using PairKey = std::pair<std::string, std::string>;

}  // namespace

FlowCategory handle_cancel(const FlowCategory& cat, const std::string& u,
                           const std::string& l) {
  const int gu = cat.grading(u);
  const int gl = cat.grading(l);
  if (u == l) throw MoveError(Code::E_SELF, "cannot cancel '" + u + "' against itself");
  if (gu != gl + 1)
    throw MoveError(Code::E_GRADING, "cancel requires |" + u + "| = |" + l +
                                         "| + 1, got " + std::to_string(gu) +
                                         " and " + std::to_string(gl));
  const ZeroModuli* ul = cat.zero(u, l);
  if (!ul || ul->points.size() != 1)
    throw MoveError(Code::E_NOT_CANCELLABLE,
                    "M(" + u + "," + l + ") is not a single point");
  const int eps_sign = ul->points[0].sign;

  FlowCategory out = cat;
  out.remove_object(u);
  out.remove_object(l);

  // 0-dimensional composites: M'(a,b) gains one point per
  // (B,A) in M(u,b) x M(a,l) with sign -eps*sign(B)*sign(A).
  // comp[{a,b}][{B id, A id}] = composite id, reused by the band endpoints.
  std::map<PairKey, std::map<PairKey, std::string>> comp;
  for (const auto& [bkey, bm] : cat.zero_moduli()) {
    if (bkey.upper != u || bkey.lower == l || bm.empty()) continue;
    const std::string& b = bkey.lower;
    for (const auto& [akey, am] : cat.zero_moduli()) {
      if (akey.lower != l || akey.upper == u || am.empty()) continue;
      const std::string& a = akey.upper;
      for (const SignedPoint& B : bm.points)
        for (const SignedPoint& A : am.points) {
          std::string id = out.fresh_point_id(a, b, B.id + "_" + A.id);
          out.add_point(a, b, SignedPoint{id, -eps_sign * B.sign * A.sign});
          comp[{a, b}][{B.id, A.id}] = id;
        }
    }
  }

  std::map<PairKey, std::vector<Piece>> work;
  std::map<PairKey, std::vector<Circle>> born_circles;

  // Type (i): bands {B} x J for B a point of M(u,b), J a component of the
  // 1-dimensional M(a,l). Interval bands carry fr(J)+1+eps_B; their J-ends
  // through u become gluing sites toward the old components, other ends
  // become composite-point flows. Product circles get label(S)+1+eps_B.
  for (const auto& [bkey, bm] : cat.zero_moduli()) {
    if (bkey.upper != u || bkey.lower == l || bm.empty()) continue;
    const std::string& b = bkey.lower;
    for (const auto& [akey, am] : cat.one_moduli()) {
      if (akey.lower != l || am.empty()) continue;
      const std::string& a = akey.upper;
      for (const SignedPoint& B : bm.points) {
        for (const Interval& J : am.intervals) {
          Piece piece;
          piece.id = B.id + "_" + J.id;
          piece.fr = (J.fr + 1 + B.eps()) % 2;
          const BrokenFlow* ends[2] = {&J.end1, &J.end2};
          for (int k = 0; k < 2; ++k) {
            const BrokenFlow& f = *ends[k];
            if (f.via == u)
              piece.ports[k] = Port{false, {}, "u|" + B.id + "|" + f.upper};
            else
              piece.ports[k] =
                  Port{true,
                       BrokenFlow{f.via, comp.at({f.via, b}).at({B.id, f.lower}),
                                  f.upper},
                       ""};
          }
          work[{a, b}].push_back(std::move(piece));
        }
        for (const Circle& S : am.circles)
          born_circles[{a, b}].push_back(
              Circle{B.id + "_" + S.id, (S.label + 1 + B.eps()) % 2});
      }
    }
  }

  // Type (ii): bands J' x {A} for J' a component of the 1-dimensional M(u,b)
  // and A a point of M(a,l). Framing values are carried over unchanged; ends
  // through l become gluing sites, others become composite-point flows.
  for (const auto& [bkey, bm] : cat.one_moduli()) {
    if (bkey.upper != u || bm.empty()) continue;
    const std::string& b = bkey.lower;
    for (const auto& [akey, am] : cat.zero_moduli()) {
      if (akey.lower != l || akey.upper == u || am.empty()) continue;
      const std::string& a = akey.upper;
      for (const Interval& Jp : bm.intervals) {
        for (const SignedPoint& A : am.points) {
          Piece piece;
          piece.id = Jp.id + "_" + A.id;
          piece.fr = Jp.fr;
          const BrokenFlow* ends[2] = {&Jp.end1, &Jp.end2};
          for (int k = 0; k < 2; ++k) {
            const BrokenFlow& f = *ends[k];
            if (f.via == l)
              piece.ports[k] = Port{false, {}, "l|" + f.lower + "|" + A.id};
            else
              piece.ports[k] =
                  Port{true,
                       BrokenFlow{f.via, f.lower,
                                  comp.at({a, f.via}).at({f.upper, A.id})},
                       ""};
          }
          work[{a, b}].push_back(std::move(piece));
        }
      }
      for (const Circle& Sp : bm.circles)
        for (const SignedPoint& A : am.points)
          born_circles[{a, b}].push_back(Circle{Sp.id + "_" + A.id, Sp.label});
    }
  }

  // Type (iii): surviving old components. Ends through u or l turn into
  // gluing sites matching the band tags above; any pair containing such an
  // end joins the reassembly.
  std::set<PairKey> active;
  for (const auto& [key, w] : work) active.insert(key);
  for (const auto& [key, m] : cat.one_moduli()) {
    if (key.upper == u || key.upper == l || key.lower == u || key.lower == l)
      continue;
    bool touched = false;
    for (const Interval& iv : m.intervals)
      if (iv.end1.via == u || iv.end1.via == l || iv.end2.via == u ||
          iv.end2.via == l)
        touched = true;
    if (touched) active.insert({key.upper, key.lower});
  }
  for (const PairKey& key : active) {
    const OneModuli* m = cat.one(key.first, key.second);
    if (!m) continue;
    for (const Interval& iv : m->intervals) {
      Piece piece;
      piece.id = iv.id;
      piece.fr = iv.fr;
      const BrokenFlow* ends[2] = {&iv.end1, &iv.end2};
      for (int k = 0; k < 2; ++k) {
        const BrokenFlow& f = *ends[k];
        if (f.via == u)
          piece.ports[k] = Port{false, {}, "u|" + f.lower + "|" + f.upper};
        else if (f.via == l)
          piece.ports[k] = Port{false, {}, "l|" + f.lower + "|" + f.upper};
        else
          piece.ports[k] = Port{true, f, ""};
      }
      work[key].push_back(std::move(piece));
      out.remove_interval(key.first, key.second, iv.id);
    }
  }

  // Walk the chains: gluing sites pair up pieces; framings add over a chain;
  // a chain with two free ports becomes an interval, a closed chain becomes
  // a circle labelled by its total framing.
  for (auto& [key, pieces] : work) {
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& p, const Piece& q) { return p.id < q.id; });
    std::map<std::string, std::vector<std::pair<std::size_t, int>>> tag_map;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (int k = 0; k < 2; ++k)
        if (!pieces[i].ports[k].free) tag_map[pieces[i].ports[k].tag].push_back({i, k});
    for (const auto& [tag, sites] : tag_map)
      if (sites.size() != 2)
        throw MoveError(Code::E_DANGLING_ENDPOINT,
                        "gluing site " + tag + " in M(" + key.first + "," +
                            key.second + ") is unmatched; category invalid");

    std::vector<bool> visited(pieces.size(), false);
    for (std::size_t start = 0; start < pieces.size(); ++start) {
      if (visited[start]) continue;
      // Collect the connected chain through `start`.
      std::vector<std::size_t> member_stack{start};
      visited[start] = true;
      int fr_sum = 0;
      std::string min_id = pieces[start].id;
      std::vector<BrokenFlow> free_ends;
      while (!member_stack.empty()) {
        std::size_t i = member_stack.back();
        member_stack.pop_back();
        fr_sum += pieces[i].fr;
        min_id = std::min(min_id, pieces[i].id);
        for (int k = 0; k < 2; ++k) {
          const Port& port = pieces[i].ports[k];
          if (port.free) {
            free_ends.push_back(port.end);
          } else {
            for (auto [j, kk] : tag_map.at(port.tag)) {
              if (!visited[j]) {
                visited[j] = true;
                member_stack.push_back(j);
              }
            }
          }
        }
      }
      if (free_ends.size() == 2) {
        Interval iv;
        iv.id = out.fresh_component_id(key.first, key.second, min_id);
        iv.fr = fr_sum % 2;
        iv.end1 = free_ends[0];
        iv.end2 = free_ends[1];
        out.add_interval(key.first, key.second, iv);
      } else if (free_ends.empty()) {
        out.add_circle(key.first, key.second,
                       Circle{out.fresh_component_id(key.first, key.second, min_id),
                              fr_sum % 2});
      } else {
        throw MoveError(Code::E_DANGLING_ENDPOINT,
                        "chain through piece '" + min_id + "' in M(" + key.first +
                            "," + key.second + ") has " +
                            std::to_string(free_ends.size()) + " free ends");
      }
    }
  }

  for (const auto& [key, circles] : born_circles)
    for (const Circle& c : circles)
      out.add_circle(key.first, key.second,
                     Circle{out.fresh_component_id(key.first, key.second, c.id),
                            c.label});

  return out;
}

}  // namespace flowcat
