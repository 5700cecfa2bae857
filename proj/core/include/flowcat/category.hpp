#pragma once

// Data model for framed flow categories truncated at moduli dimension <= 1.
//
// Objects carry an integer grading. For objects a, b with |a| - |b| = 1 the
// moduli space M(a,b) is a finite set of signed points; with |a| - |b| = 2 it
// is a compact framed 1-manifold: intervals (framing in Z/2) whose endpoints
// are broken flows through intermediate objects, plus free circles (label in
// Z/2; label 0 is the generator of the framed cobordism group, label 1 is
// null-cobordant).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flowcat {

struct SignedPoint {
  std::string id;
  int sign = +1;  // +1 or -1
  // Z/2 framing of a point: 0 for sign +1, 1 for sign -1.
  int eps() const { return sign > 0 ? 0 : 1; }
  friend bool operator==(const SignedPoint&, const SignedPoint&) = default;
};

// One end of an interval in M(a,b): a broken flow through an object `via`
// of middle grading, pairing a point of M(via,b) with a point of M(a,via).
struct BrokenFlow {
  std::string via;
  std::string lower;  // point id in M(via, b)
  std::string upper;  // point id in M(a, via)
  friend auto operator<=>(const BrokenFlow&, const BrokenFlow&) = default;
};

struct Interval {
  std::string id;
  int fr = 0;  // framing in Z/2
  BrokenFlow end1, end2;  // stored with end1 <= end2

  void canonicalize() {
    if (end2 < end1) std::swap(end1, end2);
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Circle {
  std::string id;
  int label = 0;  // Z/2 framed-cobordism class; 0 = generator, 1 = bounding
  friend bool operator==(const Circle&, const Circle&) = default;
};

// Key of a moduli space M(upper, lower).
struct ModuliKey {
  std::string upper, lower;
  friend auto operator<=>(const ModuliKey&, const ModuliKey&) = default;
};

// Signed points of a grading-gap-1 moduli space, kept sorted by id.
struct ZeroModuli {
  std::vector<SignedPoint> points;

  const SignedPoint* find(const std::string& id) const;
  bool empty() const { return points.empty(); }
  friend bool operator==(const ZeroModuli&, const ZeroModuli&) = default;
};

// Intervals and circles of a grading-gap-2 moduli space, kept sorted by id.
struct OneModuli {
  std::vector<Interval> intervals;
  std::vector<Circle> circles;

  const Interval* find_interval(const std::string& id) const;
  const Circle* find_circle(const std::string& id) const;
  bool empty() const { return intervals.empty() && circles.empty(); }
  friend bool operator==(const OneModuli&, const OneModuli&) = default;
};

class FlowCategory {
 public:
  // --- objects ---------------------------------------------------------
  // id -> grading, iterated in id order.
  const std::map<std::string, int>& objects() const { return objects_; }
  bool has_object(const std::string& id) const { return objects_.count(id) != 0; }
  int grading(const std::string& id) const;  // throws MoveError(E_UNKNOWN_OBJECT)
  void add_object(const std::string& id, int grading);  // throws on duplicate

  // Objects sorted by (grading descending, id ascending) — the canonical
  // serialization order.
  std::vector<std::string> objects_by_grading() const;
  // Object ids at one grading, sorted ascending (chain basis order).
  std::vector<std::string> objects_at(int grading) const;
  std::optional<int> min_grading() const;
  std::optional<int> max_grading() const;

  // --- moduli ----------------------------------------------------------
  const std::map<ModuliKey, ZeroModuli>& zero_moduli() const { return zero_; }
  const std::map<ModuliKey, OneModuli>& one_moduli() const { return one_; }

  const ZeroModuli* zero(const std::string& upper, const std::string& lower) const;
  const OneModuli* one(const std::string& upper, const std::string& lower) const;

  // Mutation helpers keep per-moduli component lists sorted by id and reject
  // duplicate ids within a moduli space.
  void add_point(const std::string& upper, const std::string& lower, SignedPoint p);
  void add_interval(const std::string& upper, const std::string& lower, Interval iv);
  void add_circle(const std::string& upper, const std::string& lower, Circle c);

  void remove_point(const std::string& upper, const std::string& lower,
                    const std::string& point_id);
  void remove_interval(const std::string& upper, const std::string& lower,
                       const std::string& interval_id);
  void remove_circle(const std::string& upper, const std::string& lower,
                     const std::string& circle_id);
  // Removes an object together with every moduli space involving it.
  void remove_object(const std::string& id);

  // Drops empty moduli entries (serialization emits nothing for them anyway).
  void prune_empty_moduli();

  // --- id generation ---------------------------------------------------
  // Fresh ids append "_c" (repeatedly) until unused in the relevant scope.
  std::string fresh_object_id(const std::string& base) const;
  std::string fresh_point_id(const std::string& upper, const std::string& lower,
                             const std::string& base) const;
  std::string fresh_component_id(const std::string& upper, const std::string& lower,
                                 const std::string& base) const;

  friend bool operator==(const FlowCategory&, const FlowCategory&) = default;

 private:
  std::map<std::string, int> objects_;
  std::map<ModuliKey, ZeroModuli> zero_;
  std::map<ModuliKey, OneModuli> one_;
};

// FNV-1a hash of the canonical serialization, as fixed-width hex. Used by
// move logs to pin down the category a move was applied to.
std::string digest(const FlowCategory& cat);

}  // namespace flowcat
