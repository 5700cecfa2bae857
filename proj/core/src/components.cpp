#include "flowcat/components.hpp"

#include <algorithm>
#include <map>

namespace flowcat {

namespace {

struct UnionFind {
  std::map<std::string, std::string> parent;

  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it->second == x) return it->second;
    const std::string root = find(it->second);
    it->second = root;
    return parent.find(x)->second;
  }

  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);  // keep the smallest id as root
    parent[rb] = ra;
  }
};

}  // namespace

std::vector<std::vector<std::string>> components(const FlowCategory& cat) {
  UnionFind uf;
  for (const auto& [id, g] : cat.objects()) uf.parent[id] = id;
  for (const auto& [key, m] : cat.zero_moduli())
    if (!m.empty()) uf.unite(key.upper, key.lower);
  for (const auto& [key, m] : cat.one_moduli())
    if (!m.empty()) uf.unite(key.upper, key.lower);

  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [id, g] : cat.objects()) groups[uf.find(id)].push_back(id);

  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  // map iteration gives roots ascending = components sorted by smallest member,
  // and members were inserted in ascending id order already.
  return out;
}

}  // namespace flowcat
