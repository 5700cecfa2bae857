#pragma once

// Shared helpers for the test suite.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "flowcat/category.hpp"
#include "flowcat/chain.hpp"
#include "flowcat/matrix.hpp"

namespace testutil {

// A two-object piece [u -> l] with `count` points all of sign `sign`,
// u at grading `upper_grading`, l one below.
inline flowcat::FlowCategory piece(const std::string& u, const std::string& l,
                                   int count, int sign, int upper_grading = 1) {
  flowcat::FlowCategory cat;
  cat.add_object(u, upper_grading);
  cat.add_object(l, upper_grading - 1);
  for (int i = 0; i < count; ++i)
    cat.add_point(u, l, flowcat::SignedPoint{"q" + std::to_string(i), sign});
  return cat;
}

// Chain entry of the differential out of grading g at (row object, col object);
// zero if either object is absent from its basis.
inline flowcat::Int entry(const flowcat::ChainComplex& cc, int g,
                          const std::string& row, const std::string& col) {
  auto it = cc.step.find(g);
  if (it == cc.step.end()) return 0;
  auto find = [](const std::vector<std::string>& v, const std::string& s) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == s) return static_cast<long long>(i);
    return -1LL;
  };
  auto rit = cc.basis.find(g - 1);
  auto cit = cc.basis.find(g);
  if (rit == cc.basis.end() || cit == cc.basis.end()) return 0;
  long long r = find(rit->second, row), c = find(cit->second, col);
  if (r < 0 || c < 0) return 0;
  return it->second.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
}

// Per grading step, the multiset of nonzero entries (as strings, signed).
inline std::map<int, std::multiset<std::string>> nonzero_entries(
    const flowcat::ChainComplex& cc) {
  std::map<int, std::multiset<std::string>> out;
  for (const auto& [g, M] : cc.step)
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (std::size_t c = 0; c < M.cols(); ++c)
        if (M.at(r, c) != 0) out[g].insert(M.at(r, c).get_str());
  return out;
}

// True when every row and every column holds at most one nonzero entry.
inline bool is_diagonalish(const flowcat::IntMatrix& M) {
  for (std::size_t r = 0; r < M.rows(); ++r) {
    int nz = 0;
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (M.at(r, c) != 0) ++nz;
    if (nz > 1) return false;
  }
  for (std::size_t c = 0; c < M.cols(); ++c) {
    int nz = 0;
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (M.at(r, c) != 0) ++nz;
    if (nz > 1) return false;
  }
  return true;
}

}  // namespace testutil
