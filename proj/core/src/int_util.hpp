// Internal integer helpers shared by the Smith-form and reduction code.
// Not installed.
#pragma once

#include "flowcat/matrix.hpp"

namespace flowcat::detail {

// Quotient minimizing |dividend - q*divisor| (centered division). Any
// remainder left behind is at most |divisor|/2 in absolute value.
inline Int centered_quotient(const Int& dividend, const Int& divisor) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), dividend.get_mpz_t(),
              divisor.get_mpz_t());
  if (2 * abs(r) > abs(divisor)) q += 1;
  return q;
}

}  // namespace flowcat::detail
