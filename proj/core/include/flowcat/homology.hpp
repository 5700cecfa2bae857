#pragma once

// Graded homology of a chain complex: free rank plus torsion over Z (torsion
// reported as its primary decomposition into prime powers), and dimensions
// over the prime fields Z/p.

#include <map>
#include <vector>

#include "flowcat/chain.hpp"
#include "flowcat/matrix.hpp"

namespace flowcat {

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // prime powers > 1, sorted ascending
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Prime-power factorization of d >= 1, ordered by ascending prime:
// 6 -> {2,3}; 8 -> {8}; 12 -> {4,3}; 1 -> {}.
std::vector<Int> primary_decompose(const Int& d);

// Throws MoveError(E_NOT_COMPLEX) if consecutive differentials do not compose
// to zero.
std::map<int, HomologyGroup> homology_Z(const ChainComplex& cc);
std::map<int, std::size_t> homology_mod_p(const ChainComplex& cc, unsigned p);

// Rank of A over the field Z/p (Gaussian elimination).
std::size_t rank_mod_p(const IntMatrix& A, unsigned p);

}  // namespace flowcat
