#include "flowcat/validate.hpp"

#include <map>

namespace flowcat {

namespace {

std::string moduli_name(const ModuliKey& k) {
  return "M(" + k.upper + "," + k.lower + ")";
}

std::string flow_name(const BrokenFlow& f) {
  return "(" + f.via + ";" + f.lower + ";" + f.upper + ")";
}

}  // namespace

ValidationReport validate(const FlowCategory& cat) {
  ValidationReport rep;
  auto add = [&](Code code, std::string msg) {
    rep.violations.push_back({code, std::move(msg)});
  };

  // Moduli keys: known objects, correct grading gaps, fr/label in range.
  for (const auto& [key, m] : cat.zero_moduli()) {
    if (!cat.has_object(key.upper) || !cat.has_object(key.lower)) {
      add(Code::E_GRADING, moduli_name(key) + " references an unknown object");
      continue;
    }
    if (cat.objects().at(key.upper) - cat.objects().at(key.lower) != 1)
      add(Code::E_GRADING, moduli_name(key) + " does not have grading gap 1");
    for (const SignedPoint& p : m.points)
      if (p.sign != 1 && p.sign != -1)
        add(Code::E_PARSE, "point '" + p.id + "' in " + moduli_name(key) +
                               " has sign outside {+1,-1}");
  }
  for (const auto& [key, m] : cat.one_moduli()) {
    if (!cat.has_object(key.upper) || !cat.has_object(key.lower)) {
      add(Code::E_GRADING, moduli_name(key) + " references an unknown object");
      continue;
    }
    if (cat.objects().at(key.upper) - cat.objects().at(key.lower) != 2)
      add(Code::E_GRADING, moduli_name(key) + " does not have grading gap 2");
    for (const Interval& iv : m.intervals)
      if (iv.fr != 0 && iv.fr != 1)
        add(Code::E_PARSE, "interval '" + iv.id + "' in " + moduli_name(key) +
                               " has fr outside {0,1}");
    for (const Circle& c : m.circles)
      if (c.label != 0 && c.label != 1)
        add(Code::E_PARSE, "circle '" + c.id + "' in " + moduli_name(key) +
                               " has label outside {0,1}");
  }
  if (!rep.ok()) return rep;  // key-level damage makes the rest unreliable

  // Boundary coherence: for every grading-gap-2 pair (a,b), the multiset of
  // interval endpoints of M(a,b) must equal the multiset of broken flows
  // {(z; p in M(z,b); q in M(a,z))}. Also verifies the opposite-sign invariant
  // per interval while endpoint signs are resolvable.
  for (const auto& [aid, ga] : cat.objects()) {
    for (const auto& [bid, gb] : cat.objects()) {
      if (ga - gb != 2) continue;
      ModuliKey key{aid, bid};

      std::map<BrokenFlow, int> flows;
      for (const auto& [zid, gz] : cat.objects()) {
        if (gz != gb + 1) continue;
        const ZeroModuli* lo = cat.zero(zid, bid);
        const ZeroModuli* up = cat.zero(aid, zid);
        if (!lo || !up) continue;
        for (const SignedPoint& p : lo->points)
          for (const SignedPoint& q : up->points) flows[{zid, p.id, q.id}] += 1;
      }

      const OneModuli* om = cat.one(aid, bid);
      if (om) {
        for (const Interval& iv : om->intervals) {
          int end_signs[2] = {0, 0};
          const BrokenFlow* ends[2] = {&iv.end1, &iv.end2};
          for (int e = 0; e < 2; ++e) {
            const BrokenFlow& f = *ends[e];
            const ZeroModuli* lo = cat.zero(f.via, bid);
            const ZeroModuli* up = cat.zero(aid, f.via);
            const SignedPoint* lp = lo ? lo->find(f.lower) : nullptr;
            const SignedPoint* up_pt = up ? up->find(f.upper) : nullptr;
            if (!cat.has_object(f.via) || !lp || !up_pt) {
              add(Code::E_DANGLING_ENDPOINT,
                  "interval '" + iv.id + "' in " + moduli_name(key) + " end " +
                      flow_name(f) + " references a nonexistent broken flow");
              continue;
            }
            end_signs[e] = lp->sign * up_pt->sign;
            auto it = flows.find(f);
            if (it == flows.end() || it->second == 0) {
              add(Code::E_DANGLING_ENDPOINT,
                  "interval '" + iv.id + "' in " + moduli_name(key) + " end " +
                      flow_name(f) + " reuses an already-covered broken flow");
            } else {
              it->second -= 1;
            }
          }
          if (end_signs[0] != 0 && end_signs[1] != 0 &&
              end_signs[0] == end_signs[1])
            add(Code::E_ENDPOINT_SIGN,
                "interval '" + iv.id + "' in " + moduli_name(key) +
                    " has endpoints with equal composite signs");
        }
      }
      for (const auto& [f, count] : flows)
        if (count > 0)
          add(Code::E_DANGLING_ENDPOINT,
              "broken flow " + flow_name(f) + " of " + moduli_name(key) +
                  " is not covered by any interval endpoint (multiplicity " +
                  std::to_string(count) + ")");
    }
  }

  // Independent d∘d = 0 check over Z.
  for (const auto& [aid, ga] : cat.objects()) {
    for (const auto& [bid, gb] : cat.objects()) {
      if (ga - gb != 2) continue;
      long long total = 0;
      for (const auto& [zid, gz] : cat.objects()) {
        if (gz != gb + 1) continue;
        const ZeroModuli* lo = cat.zero(zid, bid);
        const ZeroModuli* up = cat.zero(aid, zid);
        if (!lo || !up) continue;
        long long nlo = 0, nup = 0;
        for (const SignedPoint& p : lo->points) nlo += p.sign;
        for (const SignedPoint& q : up->points) nup += q.sign;
        total += nlo * nup;
      }
      if (total != 0)
        add(Code::E_NOT_COMPLEX,
            "d∘d entry at (" + aid + "," + bid + ") equals " +
                std::to_string(total));
    }
  }

  return rep;
}

}  // namespace flowcat
