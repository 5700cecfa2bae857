#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "flowcat/moves.hpp"

namespace flowcat {

namespace {
using PairKey = std::pair<std::string, std::string>;
}  // namespace

FlowCategory whitney_cancel_points(const FlowCategory& cat, const std::string& x,
                                   const std::string& y, const std::string& pos,
                                   const std::string& neg) {
  cat.grading(x);
  cat.grading(y);
  const ZeroModuli* m = cat.zero(x, y);
  const SignedPoint* p = m ? m->find(pos) : nullptr;
  const SignedPoint* n = m ? m->find(neg) : nullptr;
  if (!p || !n)
    throw MoveError(Code::E_NOT_SAME_MODULI,
                    "points '" + pos + "' and '" + neg + "' must both lie in M(" +
                        x + "," + y + ")");
  if (pos == neg || p->sign != 1 || n->sign != -1)
    throw MoveError(Code::E_SIGNS, "cancelling points must be a distinct +/- pair; got '" +
                                       pos + "' and '" + neg + "'");

  FlowCategory out = cat;

  // Each point A of M(a,x) yields a band joining the interval ends
  // (x; pos; A) and (x; neg; A) inside M(a,y); each point B of M(y,b) yields
  // a band joining (y; B; pos) and (y; B; neg) inside M(x,b). Bands add one
  // to the framing of the glued component.
  struct Band {
    BrokenFlow e1, e2;
  };
  std::map<PairKey, std::vector<Band>> bands;
  for (const auto& [key, zm] : cat.zero_moduli()) {
    if (zm.empty()) continue;
    if (key.lower == x && key.upper != y)
      for (const SignedPoint& A : zm.points)
        bands[{key.upper, y}].push_back(
            Band{BrokenFlow{x, pos, A.id}, BrokenFlow{x, neg, A.id}});
    if (key.upper == y && key.lower != x)
      for (const SignedPoint& B : zm.points)
        bands[{x, key.lower}].push_back(
            Band{BrokenFlow{y, B.id, pos}, BrokenFlow{y, B.id, neg}});
  }

  for (const auto& [key, band_list] : bands) {
    const OneModuli* om = cat.one(key.first, key.second);
    std::map<BrokenFlow, std::pair<std::size_t, int>> end_index;
    std::vector<Interval> ivs;
    if (om) ivs = om->intervals;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      end_index[ivs[i].end1] = {i, 0};
      end_index[ivs[i].end2] = {i, 1};
    }

    // adj[i][k]: the interval end glued to end k of interval i, if any.
    std::vector<std::array<std::optional<std::pair<std::size_t, int>>, 2>> adj(
        ivs.size());
    std::vector<int> band_count(ivs.size(), 0);
    auto locate = [&](const BrokenFlow& f) {
      auto it = end_index.find(f);
      if (it == end_index.end())
        throw MoveError(Code::E_DANGLING_ENDPOINT,
                        "no interval end matches the flow through '" + f.via +
                            "' in M(" + key.first + "," + key.second +
                            "); category invalid");
      return it->second;
    };
    std::vector<bool> touched(ivs.size(), false);
    // Bands counted once per glued component: attribute each band to the
    // interval holding its first end.
    std::vector<int> bands_here(ivs.size(), 0);
    for (const Band& band : band_list) {
      auto s1 = locate(band.e1);
      auto s2 = locate(band.e2);
      adj[s1.first][s1.second] = s2;
      adj[s2.first][s2.second] = s1;
      bands_here[s1.first] += 1;
      touched[s1.first] = touched[s2.first] = true;
    }

    // Rebuild only the components reached by at least one band.
    std::vector<bool> visited(ivs.size(), false);
    struct Chain {
      std::string min_id;
      int fr = 0;
      std::vector<BrokenFlow> free_ends;
      bool any_band = false;
    };
    std::vector<Chain> chains;
    for (std::size_t start = 0; start < ivs.size(); ++start) {
      if (visited[start]) continue;
      Chain chain;
      chain.min_id = ivs[start].id;
      std::vector<std::size_t> stack{start};
      visited[start] = true;
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        chain.fr += ivs[i].fr + bands_here[i];
        chain.min_id = std::min(chain.min_id, ivs[i].id);
        chain.any_band = chain.any_band || touched[i];
        for (int k = 0; k < 2; ++k) {
          if (adj[i][k]) {
            std::size_t j = adj[i][k]->first;
            if (!visited[j]) {
              visited[j] = true;
              stack.push_back(j);
            }
          } else {
            chain.free_ends.push_back(k == 0 ? ivs[i].end1 : ivs[i].end2);
          }
        }
      }
      if (chain.any_band) chains.push_back(std::move(chain));
    }

    // Drop all intervals belonging to banded components, then re-add chains.
    std::vector<bool> in_banded(ivs.size(), false);
    {
      std::vector<bool> seen(ivs.size(), false);
      for (std::size_t start = 0; start < ivs.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> members;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        bool any_band = false;
        while (!stack.empty()) {
          std::size_t i = stack.back();
          stack.pop_back();
          members.push_back(i);
          any_band = any_band || touched[i];
          for (int k = 0; k < 2; ++k)
            if (adj[i][k] && !seen[adj[i][k]->first]) {
              seen[adj[i][k]->first] = true;
              stack.push_back(adj[i][k]->first);
            }
        }
        if (any_band)
          for (std::size_t i : members) in_banded[i] = true;
      }
    }
    for (std::size_t i = 0; i < ivs.size(); ++i)
      if (in_banded[i]) out.remove_interval(key.first, key.second, ivs[i].id);

    std::sort(chains.begin(), chains.end(),
              [](const Chain& a, const Chain& b) { return a.min_id < b.min_id; });
    for (const Chain& chain : chains) {
      if (chain.free_ends.size() == 2) {
        Interval iv;
        iv.id = out.fresh_component_id(key.first, key.second, chain.min_id);
        iv.fr = chain.fr % 2;
        iv.end1 = chain.free_ends[0];
        iv.end2 = chain.free_ends[1];
        out.add_interval(key.first, key.second, iv);
      } else if (chain.free_ends.empty()) {
        out.add_circle(
            key.first, key.second,
            Circle{out.fresh_component_id(key.first, key.second, chain.min_id),
                   chain.fr % 2});
      } else {
        throw MoveError(Code::E_DANGLING_ENDPOINT,
                        "glued chain through '" + chain.min_id + "' in M(" +
                            key.first + "," + key.second + ") has " +
                            std::to_string(chain.free_ends.size()) +
                            " free ends");
      }
    }
  }

  out.remove_point(x, y, pos);
  out.remove_point(x, y, neg);
  return out;
}

FlowCategory normalize_circles(const FlowCategory& cat, const std::string& a,
                               const std::string& b) {
  const int ga = cat.grading(a);
  const int gb = cat.grading(b);
  if (ga != gb + 2)
    throw MoveError(Code::E_GRADING, "normalize requires |" + a + "| = |" + b +
                                         "| + 2, got " + std::to_string(ga) +
                                         " and " + std::to_string(gb));
  FlowCategory out = cat;
  const OneModuli* om = cat.one(a, b);
  if (!om || om->circles.empty()) return out;

  int zero_labelled = 0;
  std::string survivor_id;
  for (const Circle& c : om->circles) {
    if (c.label == 0) {
      if (zero_labelled == 0 || c.id < survivor_id) survivor_id = c.id;
      ++zero_labelled;
    }
  }
  std::vector<std::string> ids;
  for (const Circle& c : om->circles) ids.push_back(c.id);
  for (const std::string& id : ids) out.remove_circle(a, b, id);
  if (zero_labelled % 2 == 1) out.add_circle(a, b, Circle{survivor_id, 0});
  return out;
}

FlowCategory birth(const FlowCategory& cat, const std::string& u,
                   const std::string& l, int grading) {
  if (u == l)
    throw MoveError(Code::E_DUPLICATE_ID,
                    "birth requires two distinct object ids, got '" + u + "' twice");
  if (cat.has_object(u))
    throw MoveError(Code::E_DUPLICATE_ID, "object '" + u + "' already exists");
  if (cat.has_object(l))
    throw MoveError(Code::E_DUPLICATE_ID, "object '" + l + "' already exists");
  FlowCategory out = cat;
  out.add_object(u, grading + 1);
  out.add_object(l, grading);
  out.add_point(u, l, SignedPoint{"pt", 1});
  return out;
}

}  // namespace flowcat
