#include "flowcat/homology.hpp"

#include <algorithm>

#include "flowcat/errors.hpp"
#include "flowcat/smith.hpp"

namespace flowcat {

std::vector<Int> primary_decompose(const Int& d) {
  std::vector<Int> out;
  Int n = abs(d);
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    Int power = 1;
    while (n % p == 0) {
      power *= p;
      n /= p;
    }
    out.push_back(power);
  }
  if (n > 1) out.push_back(n);  // remaining prime factor, largest
  return out;
}

namespace {

void require_complex(const ChainComplex& cc) {
  for (int g = cc.min_grading + 1; g < cc.max_grading; ++g) {
    auto a = cc.step.find(g), b = cc.step.find(g + 1);
    if (a == cc.step.end() || b == cc.step.end()) continue;
    if (!(a->second * b->second).is_zero())
      throw MoveError(Code::E_NOT_COMPLEX,
                      "differential composite at grading " + std::to_string(g + 1) +
                          " -> " + std::to_string(g - 1) + " is nonzero");
  }
}

std::size_t rank_Z(const ChainComplex& cc, int g) {
  auto it = cc.step.find(g);
  if (it == cc.step.end()) return 0;
  return smith_normal_form(it->second).diag.size();
}

}  // namespace

std::map<int, HomologyGroup> homology_Z(const ChainComplex& cc) {
  require_complex(cc);
  std::map<int, HomologyGroup> out;
  for (int g = cc.min_grading; g <= cc.max_grading; ++g) {
    HomologyGroup h;
    std::size_t dim = cc.basis.count(g) ? cc.basis.at(g).size() : 0;
    std::size_t rank_out = rank_Z(cc, g);
    std::size_t rank_in = rank_Z(cc, g + 1);
    h.free_rank = dim - rank_out - rank_in;
    if (auto it = cc.step.find(g + 1); it != cc.step.end()) {
      for (const Int& d : smith_normal_form(it->second).diag) {
        std::vector<Int> powers = primary_decompose(d);
        h.torsion.insert(h.torsion.end(), powers.begin(), powers.end());
      }
    }
    std::sort(h.torsion.begin(), h.torsion.end());
    out[g] = std::move(h);
  }
  return out;
}

std::size_t rank_mod_p(const IntMatrix& A, unsigned p) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::vector<long>> M(m, std::vector<long>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int r = A.at(i, j) % static_cast<long>(p);
      long v = r.get_si();
      M[i][j] = ((v % static_cast<long>(p)) + p) % p;
    }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && M[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(M[pivot], M[rank]);
    // Scale the pivot row to 1 (p is prime, so every nonzero is invertible).
    long inv = 1, base = M[rank][col];
    for (unsigned e = 0; e < p - 2; ++e) inv = (inv * base) % p;
    for (std::size_t j = col; j < n; ++j) M[rank][j] = (M[rank][j] * inv) % p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || M[i][col] == 0) continue;
      long f = M[i][col];
      for (std::size_t j = col; j < n; ++j)
        M[i][j] = ((M[i][j] - f * M[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::map<int, std::size_t> homology_mod_p(const ChainComplex& cc, unsigned p) {
  require_complex(cc);
  std::map<int, std::size_t> out;
  auto rank_p = [&](int g) -> std::size_t {
    auto it = cc.step.find(g);
    return it == cc.step.end() ? 0 : rank_mod_p(it->second, p);
  };
  for (int g = cc.min_grading; g <= cc.max_grading; ++g) {
    std::size_t dim = cc.basis.count(g) ? cc.basis.at(g).size() : 0;
    out[g] = dim - rank_p(g) - rank_p(g + 1);
  }
  return out;
}

}  // namespace flowcat
