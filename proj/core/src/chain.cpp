#include "flowcat/chain.hpp"

namespace flowcat {

ChainComplex chain_complex(const FlowCategory& cat) {
  ChainComplex cc;
  auto lo = cat.min_grading(), hi = cat.max_grading();
  if (!lo) return cc;
  cc.min_grading = *lo;
  cc.max_grading = *hi;

  for (int g = cc.min_grading; g <= cc.max_grading; ++g)
    cc.basis[g] = cat.objects_at(g);

  for (int g = cc.min_grading + 1; g <= cc.max_grading; ++g) {
    const auto& cols = cc.basis[g];
    const auto& rows = cc.basis[g - 1];
    IntMatrix A(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (const ZeroModuli* m = cat.zero(cols[c], rows[r])) {
          long n = 0;
          for (const SignedPoint& p : m->points) n += p.sign;
          A.at(r, c) = n;
        }
      }
    cc.step[g] = std::move(A);
  }
  return cc;
}

}  // namespace flowcat
