#include "flowcat/generate.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "flowcat/moves.hpp"
#include "flowcat/validate.hpp"

namespace flowcat {
namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Adds |count| signed points "p0", "p1", ... to M(upper, lower).
void add_points(FlowCategory& cat, const std::string& upper,
                const std::string& lower, int count, int sign) {
  for (int i = 0; i < count; ++i)
    cat.add_point(upper, lower, SignedPoint{"p" + std::to_string(i), sign});
}

bool within_point_cap(const FlowCategory& cat, int max_points) {
  for (const auto& [key, mod] : cat.zero_moduli())
    if (static_cast<int>(mod.points.size()) > max_points) return false;
  return true;
}

}  // namespace

FlowCategory random_category(std::uint64_t seed, const GenerateOptions& opts) {
  std::mt19937_64 rng(seed);

  const int n_gradings = pick(rng, opts.min_gradings, opts.max_gradings);
  const int g0 = pick(rng, -2, 3);
  const int n_objects =
      pick(rng, std::min(4, opts.max_objects), opts.max_objects);

  FlowCategory cat;
  std::vector<std::string> ids;
  std::vector<int> grading_of;
  for (int i = 0; i < n_objects; ++i) {
    std::string id = "x" + std::to_string(i);
    int g = g0 + pick(rng, 0, n_gradings - 1);
    ids.push_back(id);
    grading_of.push_back(g);
  }
  // Guarantee at least one grading with two objects so equal-grading moves
  // (slides) are always available on generated categories.
  bool has_pair = false;
  for (std::size_t i = 0; i < ids.size() && !has_pair; ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (grading_of[i] == grading_of[j]) {
        has_pair = true;
        break;
      }
  if (!has_pair && ids.size() >= 2) grading_of[1] = grading_of[0];
  for (std::size_t i = 0; i < ids.size(); ++i)
    cat.add_object(ids[i], grading_of[i]);

  // Pair objects into disjoint two-term pieces [u -> l] across one grading
  // step; each piece carries 0..max_points same-signed points.
  std::vector<bool> used(ids.size(), false);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> partners;
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (!used[j] && j != i && grading_of[j] == grading_of[i] - 1)
        partners.push_back(j);
    if (partners.empty() || !chance(rng, 0.75)) continue;
    std::size_t j = partners[pick(rng, 0, static_cast<int>(partners.size()) - 1)];
    used[i] = used[j] = true;
    int t = pick(rng, -opts.max_points, opts.max_points);
    if (t != 0) add_points(cat, ids[i], ids[j], t < 0 ? -t : t, t < 0 ? -1 : +1);
  }

  // Sprinkle free circles on grading-gap-2 pairs.
  if (opts.allow_circles) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (grading_of[i] - grading_of[j] != 2) continue;
        if (!chance(rng, 0.25)) continue;
        int n_circles = pick(rng, 1, 2);
        for (int k = 0; k < n_circles; ++k)
          cat.add_circle(ids[i], ids[j],
                         Circle{"k" + std::to_string(k), pick(rng, 0, 1)});
      }
  }

  // Scramble with slides, rejecting any slide that would push a two-point
  // moduli space past the point cap.
  int n_slides = pick(rng, 0, opts.max_scramble);
  for (int s = 0; s < n_slides; ++s) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (i != j && grading_of[i] == grading_of[j]) pairs.emplace_back(i, j);
    if (pairs.empty()) break;
    auto [i, j] = pairs[pick(rng, 0, static_cast<int>(pairs.size()) - 1)];
    int sigma = chance(rng, 0.5) ? +1 : -1;
    FlowCategory slid = handle_slide(cat, ids[i], ids[j], sigma);
    if (within_point_cap(slid, opts.max_points)) cat = std::move(slid);
  }

  cat.prune_empty_moduli();
  return cat;
}

MoorePair random_moore_pair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = pick(rng, -2, 3);

  // Shared homology data: torsion orders (>= 2, arbitrary — reduction
  // refines them to prime powers) and free ranks in degrees n+1 and n.
  std::vector<int> torsion;
  int n_torsion = pick(rng, 1, 3);
  for (int i = 0; i < n_torsion; ++i) torsion.push_back(pick(rng, 2, 9));
  const int free_top = pick(rng, 0, 2);
  const int free_bot = pick(rng, 0, 2);

  auto build = [&](const std::string& prefix,
                   const std::vector<int>& orders) -> FlowCategory {
    FlowCategory cat;
    int next = 0;
    auto fresh = [&]() { return prefix + std::to_string(next++); };
    for (int t : orders) {
      std::string u = fresh(), l = fresh();
      cat.add_object(u, n + 1);
      cat.add_object(l, n);
      add_points(cat, u, l, t, chance(rng, 0.5) ? +1 : -1);
    }
    int extra_acyclic = pick(rng, 0, 2);
    for (int i = 0; i < extra_acyclic; ++i) {
      std::string u = fresh(), l = fresh();
      cat.add_object(u, n + 1);
      cat.add_object(l, n);
      add_points(cat, u, l, 1, chance(rng, 0.5) ? +1 : -1);
    }
    for (int i = 0; i < free_top; ++i) cat.add_object(fresh(), n + 1);
    for (int i = 0; i < free_bot; ++i) cat.add_object(fresh(), n);

    // Light scrambling: slides preserve homology and keep the complex
    // supported in gradings {n, n+1}.
    int n_slides = pick(rng, 0, 2);
    std::vector<std::string> uppers, lowers;
    for (const auto& [id, g] : cat.objects())
      (g == n + 1 ? uppers : lowers).push_back(id);
    for (int s = 0; s < n_slides; ++s) {
      const auto& side = chance(rng, 0.5) ? uppers : lowers;
      if (side.size() < 2) continue;
      int i = pick(rng, 0, static_cast<int>(side.size()) - 1);
      int j = pick(rng, 0, static_cast<int>(side.size()) - 2);
      if (j >= i) ++j;
      cat = handle_slide(cat, side[i], side[j], chance(rng, 0.5) ? +1 : -1);
    }
    cat.prune_empty_moduli();
    return cat;
  };

  MoorePair pair;
  pair.degree = n;
  pair.first = build("a", torsion);
  std::vector<int> shuffled = torsion;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  pair.second = build("b", shuffled);
  return pair;
}

}  // namespace flowcat
