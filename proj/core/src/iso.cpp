#include "flowcat/iso.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

namespace flowcat {

namespace {

// Local invariant of an object: grading plus multisets of per-neighbor moduli
// shapes in both directions. Used only to prune the object-bijection search;
// the backtracking phases verify everything exactly.
std::string signature(const FlowCategory& cat, const std::string& id) {
  std::ostringstream sig;
  sig << cat.objects().at(id);
  std::vector<std::string> down0, up0, down1, up1;
  for (const auto& [key, m] : cat.zero_moduli()) {
    if (m.empty()) continue;
    int plus = 0, minus = 0;
    for (const SignedPoint& p : m.points) (p.sign > 0 ? plus : minus)++;
    std::string shape =
        "(" + std::to_string(plus) + "," + std::to_string(minus) + ")";
    if (key.upper == id) down0.push_back(shape);
    if (key.lower == id) up0.push_back(shape);
  }
  for (const auto& [key, m] : cat.one_moduli()) {
    if (m.empty()) continue;
    std::vector<int> frs, labels;
    for (const Interval& iv : m.intervals) frs.push_back(iv.fr);
    for (const Circle& c : m.circles) labels.push_back(c.label);
    std::sort(frs.begin(), frs.end());
    std::sort(labels.begin(), labels.end());
    std::string shape = "(";
    for (int f : frs) shape += std::to_string(f);
    shape += ";";
    for (int l : labels) shape += std::to_string(l);
    shape += ")";
    if (key.upper == id) down1.push_back(shape);
    if (key.lower == id) up1.push_back(shape);
  }
  for (auto* v : {&down0, &up0, &down1, &up1}) {
    std::sort(v->begin(), v->end());
    sig << "|";
    for (const std::string& s : *v) sig << s;
  }
  return sig.str();
}

// Multiset equality of signs / framings / labels between one pair of
// corresponding moduli spaces.
bool moduli_shapes_match(const FlowCategory& a, const std::string& au,
                         const std::string& al, const FlowCategory& b,
                         const std::string& bu, const std::string& bl) {
  int pa = 0, ma = 0, pb = 0, mb = 0;
  if (const ZeroModuli* z = a.zero(au, al))
    for (const SignedPoint& p : z->points) (p.sign > 0 ? pa : ma)++;
  if (const ZeroModuli* z = b.zero(bu, bl))
    for (const SignedPoint& p : z->points) (p.sign > 0 ? pb : mb)++;
  if (pa != pb || ma != mb) return false;

  std::vector<int> fa, fb, la, lb;
  if (const OneModuli* o = a.one(au, al)) {
    for (const Interval& iv : o->intervals) fa.push_back(iv.fr);
    for (const Circle& c : o->circles) la.push_back(c.label);
  }
  if (const OneModuli* o = b.one(bu, bl)) {
    for (const Interval& iv : o->intervals) fb.push_back(iv.fr);
    for (const Circle& c : o->circles) lb.push_back(c.label);
  }
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return fa == fb && la == lb;
}

struct PointRef {
  std::string upper, lower, id;
  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

struct EndUse {
  ModuliKey moduli;  // moduli space the interval lives in
  const Interval* interval;
};

// Given a fixed object bijection, searches for per-moduli point bijections
// respecting signs and carrying interval endpoints onto interval endpoints
// with equal framing. Only points incident to interval ends constrain the
// search; in a valid category those are exactly the points of moduli spaces
// with non-empty companions, so the remaining points match sign-for-sign.
class PointMatcher {
 public:
  PointMatcher(const FlowCategory& a, const FlowCategory& b,
               const std::map<std::string, std::string>& phi)
      : a_(a), b_(b), phi_(phi) {
    for (const auto& [key, m] : b_.one_moduli())
      for (const Interval& iv : m.intervals) {
        b_end_index_[{key, iv.end1}] = &iv;
        b_end_index_[{key, iv.end2}] = &iv;
      }
    for (const auto& [key, m] : a_.one_moduli())
      for (const Interval& iv : m.intervals)
        for (const BrokenFlow* f : {&iv.end1, &iv.end2}) {
          uses_[PointRef{f->via, key.lower, f->lower}].push_back({key, &iv});
          uses_[PointRef{key.upper, f->via, f->upper}].push_back({key, &iv});
        }
    for (const auto& [ref, u] : uses_) vars_.push_back(ref);
  }

  bool solve(Isomorphism& out) {
    if (!assign(0)) return false;
    for (const auto& [ref, img] : asg_)
      out.points[{ref.upper, ref.lower, ref.id}] = img;
    // Pair off the unconstrained points sign-for-sign, in id order, to
    // complete the witness.
    for (const auto& [key, m] : a_.zero_moduli()) {
      if (m.empty()) continue;
      const std::string bu = phi_.at(key.upper), bl = phi_.at(key.lower);
      const ZeroModuli* bm = b_.zero(bu, bl);
      for (int sign : {+1, -1}) {
        std::vector<std::string> rest_a, rest_b;
        for (const SignedPoint& p : m.points)
          if (p.sign == sign && !asg_.count({key.upper, key.lower, p.id}))
            rest_a.push_back(p.id);
        if (bm)
          for (const SignedPoint& q : bm->points)
            if (q.sign == sign && !used_b_.count({bu, bl, q.id}))
              rest_b.push_back(q.id);
        if (rest_a.size() != rest_b.size()) return false;  // cannot happen when valid
        for (std::size_t i = 0; i < rest_a.size(); ++i)
          out.points[{key.upper, key.lower, rest_a[i]}] = rest_b[i];
      }
    }
    return true;
  }

 private:
  bool assign(std::size_t i) {
    if (i == vars_.size()) return true;
    const PointRef& ref = vars_[i];
    const ZeroModuli* am = a_.zero(ref.upper, ref.lower);
    const SignedPoint* pa = am ? am->find(ref.id) : nullptr;
    if (!pa) return false;  // end references a missing point: not isomorphic data
    const std::string bu = phi_.at(ref.upper), bl = phi_.at(ref.lower);
    const ZeroModuli* bm = b_.zero(bu, bl);
    if (!bm) return false;
    for (const SignedPoint& q : bm->points) {
      if (q.sign != pa->sign) continue;
      PointRef bref{bu, bl, q.id};
      if (used_b_.count(bref)) continue;
      asg_[ref] = q.id;
      used_b_.insert(bref);
      if (consistent(ref) && assign(i + 1)) return true;
      used_b_.erase(bref);
      asg_.erase(ref);
    }
    return false;
  }

  // Maps an interval end through the object and (partial) point assignment;
  // nullopt while some endpoint point is still unassigned.
  std::optional<BrokenFlow> map_end(const ModuliKey& akey, const BrokenFlow& e) {
    auto lo = asg_.find({e.via, akey.lower, e.lower});
    if (lo == asg_.end()) return std::nullopt;
    auto up = asg_.find({akey.upper, e.via, e.upper});
    if (up == asg_.end()) return std::nullopt;
    return BrokenFlow{phi_.at(e.via), lo->second, up->second};
  }

  // Re-checks every interval involving the just-assigned point: mapped ends
  // must exist in B's corresponding moduli, and a fully mapped interval must
  // land on a single B interval with equal framing.
  bool consistent(const PointRef& ref) {
    for (const EndUse& use : uses_.at(ref)) {
      const Interval& iv = *use.interval;
      ModuliKey bkey{phi_.at(use.moduli.upper), phi_.at(use.moduli.lower)};
      const Interval* hit1 = nullptr;
      const Interval* hit2 = nullptr;
      if (auto m1 = map_end(use.moduli, iv.end1)) {
        auto it = b_end_index_.find({bkey, *m1});
        if (it == b_end_index_.end()) return false;
        hit1 = it->second;
      }
      if (auto m2 = map_end(use.moduli, iv.end2)) {
        auto it = b_end_index_.find({bkey, *m2});
        if (it == b_end_index_.end()) return false;
        hit2 = it->second;
      }
      if (hit1 && hit2 && (hit1 != hit2 || hit1->fr != iv.fr)) return false;
    }
    return true;
  }

  const FlowCategory& a_;
  const FlowCategory& b_;
  const std::map<std::string, std::string>& phi_;
  std::map<std::pair<ModuliKey, BrokenFlow>, const Interval*> b_end_index_;
  std::map<PointRef, std::vector<EndUse>> uses_;
  std::vector<PointRef> vars_;
  std::map<PointRef, std::string> asg_;
  std::set<PointRef> used_b_;
};

}  // namespace

std::optional<Isomorphism> iso_check(const FlowCategory& a, const FlowCategory& b) {
  if (a.objects().size() != b.objects().size()) return std::nullopt;

  std::map<int, std::vector<std::string>> b_by_grading;
  for (const auto& [id, g] : b.objects()) b_by_grading[g].push_back(id);
  {
    std::map<int, std::size_t> a_counts;
    for (const auto& [id, g] : a.objects()) a_counts[g]++;
    if (a_counts.size() != b_by_grading.size()) return std::nullopt;
    for (const auto& [g, n] : a_counts) {
      auto it = b_by_grading.find(g);
      if (it == b_by_grading.end() || it->second.size() != n) return std::nullopt;
    }
  }

  std::map<std::string, std::string> sig_a, sig_b;
  for (const auto& [id, g] : a.objects()) sig_a[id] = signature(a, id);
  for (const auto& [id, g] : b.objects()) sig_b[id] = signature(b, id);
  {
    std::vector<std::string> sa, sb;
    for (const auto& [id, s] : sig_a) sa.push_back(s);
    for (const auto& [id, s] : sig_b) sb.push_back(s);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  const std::vector<std::string> order = a.objects_by_grading();
  std::map<std::string, std::string> phi;
  std::set<std::string> used;
  std::optional<Isomorphism> result;

  // Shape check for every moduli pair between the newly mapped object and all
  // previously mapped ones, in both categories and both directions.
  auto partial_ok = [&](const std::string& x) {
    for (const auto& [z, bz] : phi) {
      if (z == x) continue;
      if (!moduli_shapes_match(a, x, z, b, phi.at(x), bz)) return false;
      if (!moduli_shapes_match(a, z, x, b, bz, phi.at(x))) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == order.size()) {
      PointMatcher pm(a, b, phi);
      Isomorphism iso;
      iso.objects = phi;
      if (!pm.solve(iso)) return false;
      result = std::move(iso);
      return true;
    }
    const std::string& x = order[i];
    for (const std::string& y : b_by_grading.at(a.objects().at(x))) {
      if (used.count(y) || sig_a.at(x) != sig_b.at(y)) continue;
      phi[x] = y;
      used.insert(y);
      if (partial_ok(x) && rec(i + 1)) return true;
      phi.erase(x);
      used.erase(y);
    }
    return false;
  };

  if (a.objects().empty() || rec(0)) {
    if (a.objects().empty()) result = Isomorphism{};
    return result;
  }
  return std::nullopt;
}

}  // namespace flowcat
