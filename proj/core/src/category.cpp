#include "flowcat/category.hpp"

#include <algorithm>

#include "flowcat/errors.hpp"
#include "flowcat/io.hpp"

namespace flowcat {

std::string code_name(Code c) {
  switch (c) {
    case Code::E_PARSE: return "E_PARSE";
    case Code::E_GRADING: return "E_GRADING";
    case Code::E_SELF: return "E_SELF";
    case Code::E_NOT_CANCELLABLE: return "E_NOT_CANCELLABLE";
    case Code::E_SIGNS: return "E_SIGNS";
    case Code::E_NOT_SAME_MODULI: return "E_NOT_SAME_MODULI";
    case Code::E_DUPLICATE_ID: return "E_DUPLICATE_ID";
    case Code::E_DANGLING_ENDPOINT: return "E_DANGLING_ENDPOINT";
    case Code::E_ENDPOINT_SIGN: return "E_ENDPOINT_SIGN";
    case Code::E_NOT_COMPLEX: return "E_NOT_COMPLEX";
    case Code::E_UNKNOWN_OBJECT: return "E_UNKNOWN_OBJECT";
    case Code::E_UNKNOWN_COMPONENT: return "E_UNKNOWN_COMPONENT";
  }
  return "E_UNKNOWN";
}

const SignedPoint* ZeroModuli::find(const std::string& id) const {
  for (const auto& p : points)
    if (p.id == id) return &p;
  return nullptr;
}

const Interval* OneModuli::find_interval(const std::string& id) const {
  for (const auto& iv : intervals)
    if (iv.id == id) return &iv;
  return nullptr;
}

const Circle* OneModuli::find_circle(const std::string& id) const {
  for (const auto& c : circles)
    if (c.id == id) return &c;
  return nullptr;
}

int FlowCategory::grading(const std::string& id) const {
  auto it = objects_.find(id);
  if (it == objects_.end())
    throw MoveError(Code::E_UNKNOWN_OBJECT, "no object named '" + id + "'");
  return it->second;
}

void FlowCategory::add_object(const std::string& id, int grading) {
  if (!objects_.emplace(id, grading).second)
    throw MoveError(Code::E_DUPLICATE_ID, "object '" + id + "' already exists");
}

std::vector<std::string> FlowCategory::objects_by_grading() const {
  std::vector<std::string> ids;
  ids.reserve(objects_.size());
  for (const auto& [id, g] : objects_) ids.push_back(id);
  std::stable_sort(ids.begin(), ids.end(), [&](const auto& a, const auto& b) {
    int ga = objects_.at(a), gb = objects_.at(b);
    if (ga != gb) return ga > gb;
    return a < b;
  });
  return ids;
}

std::vector<std::string> FlowCategory::objects_at(int grading) const {
  std::vector<std::string> ids;
  for (const auto& [id, g] : objects_)
    if (g == grading) ids.push_back(id);
  return ids;  // map order is already ascending by id
}

std::optional<int> FlowCategory::min_grading() const {
  std::optional<int> m;
  for (const auto& [id, g] : objects_)
    if (!m || g < *m) m = g;
  return m;
}

std::optional<int> FlowCategory::max_grading() const {
  std::optional<int> m;
  for (const auto& [id, g] : objects_)
    if (!m || g > *m) m = g;
  return m;
}

const ZeroModuli* FlowCategory::zero(const std::string& upper,
                                     const std::string& lower) const {
  auto it = zero_.find({upper, lower});
  return it == zero_.end() ? nullptr : &it->second;
}

const OneModuli* FlowCategory::one(const std::string& upper,
                                   const std::string& lower) const {
  auto it = one_.find({upper, lower});
  return it == one_.end() ? nullptr : &it->second;
}

namespace {

template <class Vec, class Item>
void insert_sorted_unique(Vec& vec, Item item, const char* kind) {
  auto pos = std::lower_bound(
      vec.begin(), vec.end(), item,
      [](const auto& a, const auto& b) { return a.id < b.id; });
  if (pos != vec.end() && pos->id == item.id)
    throw MoveError(Code::E_DUPLICATE_ID,
                    std::string(kind) + " '" + item.id + "' already exists");
  vec.insert(pos, std::move(item));
}

template <class Vec>
void erase_by_id(Vec& vec, const std::string& id, const char* kind) {
  for (auto it = vec.begin(); it != vec.end(); ++it) {
    if (it->id == id) {
      vec.erase(it);
      return;
    }
  }
  throw MoveError(Code::E_UNKNOWN_COMPONENT,
                  std::string(kind) + " '" + id + "' not found");
}

}  // namespace

void FlowCategory::add_point(const std::string& upper, const std::string& lower,
                             SignedPoint p) {
  insert_sorted_unique(zero_[{upper, lower}].points, std::move(p), "point");
}

void FlowCategory::add_interval(const std::string& upper, const std::string& lower,
                                Interval iv) {
  iv.canonicalize();
  insert_sorted_unique(one_[{upper, lower}].intervals, std::move(iv), "interval");
}

void FlowCategory::add_circle(const std::string& upper, const std::string& lower,
                              Circle c) {
  insert_sorted_unique(one_[{upper, lower}].circles, std::move(c), "circle");
}

void FlowCategory::remove_point(const std::string& upper, const std::string& lower,
                                const std::string& point_id) {
  auto it = zero_.find({upper, lower});
  if (it == zero_.end())
    throw MoveError(Code::E_UNKNOWN_COMPONENT, "point '" + point_id + "' not found");
  erase_by_id(it->second.points, point_id, "point");
  if (it->second.empty()) zero_.erase(it);
}

void FlowCategory::remove_interval(const std::string& upper,
                                   const std::string& lower,
                                   const std::string& interval_id) {
  auto it = one_.find({upper, lower});
  if (it == one_.end())
    throw MoveError(Code::E_UNKNOWN_COMPONENT,
                    "interval '" + interval_id + "' not found");
  erase_by_id(it->second.intervals, interval_id, "interval");
  if (it->second.empty()) one_.erase(it);
}

void FlowCategory::remove_circle(const std::string& upper, const std::string& lower,
                                 const std::string& circle_id) {
  auto it = one_.find({upper, lower});
  if (it == one_.end())
    throw MoveError(Code::E_UNKNOWN_COMPONENT, "circle '" + circle_id + "' not found");
  erase_by_id(it->second.circles, circle_id, "circle");
  if (it->second.empty()) one_.erase(it);
}

void FlowCategory::remove_object(const std::string& id) {
  if (!objects_.erase(id))
    throw MoveError(Code::E_UNKNOWN_OBJECT, "no object named '" + id + "'");
  auto drop = [&](auto& m) {
    for (auto it = m.begin(); it != m.end();) {
      if (it->first.upper == id || it->first.lower == id)
        it = m.erase(it);
      else
        ++it;
    }
  };
  drop(zero_);
  drop(one_);
}

void FlowCategory::prune_empty_moduli() {
  for (auto it = zero_.begin(); it != zero_.end();)
    it = it->second.empty() ? zero_.erase(it) : std::next(it);
  for (auto it = one_.begin(); it != one_.end();)
    it = it->second.empty() ? one_.erase(it) : std::next(it);
}

std::string FlowCategory::fresh_object_id(const std::string& base) const {
  std::string id = base;
  while (has_object(id)) id += "_c";
  return id;
}

std::string FlowCategory::fresh_point_id(const std::string& upper,
                                         const std::string& lower,
                                         const std::string& base) const {
  const ZeroModuli* m = zero(upper, lower);
  std::string id = base;
  while (m && m->find(id)) id += "_c";
  return id;
}

std::string FlowCategory::fresh_component_id(const std::string& upper,
                                             const std::string& lower,
                                             const std::string& base) const {
  const OneModuli* m = one(upper, lower);
  std::string id = base;
  while (m && (m->find_interval(id) || m->find_circle(id))) id += "_c";
  return id;
}

std::string digest(const FlowCategory& cat) {
  const std::string text = serialize(cat);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace flowcat
