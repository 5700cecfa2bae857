// Category-level reduction: drive the chain complex of a category into
// (primary) Smith normal form by a recorded, replayable sequence of moves.
#pragma once

#include "flowcat/category.hpp"
#include "flowcat/moves.hpp"

namespace flowcat {

struct ReduceResult {
  FlowCategory category;
  MoveLog log;
};

// Cancels +/- point pairs (lexicographically smallest pair first, moduli in
// key order) until every 0-dimensional moduli space is single-signed, so the
// number of points everywhere equals the absolute value of the chain entry.
ReduceResult purify_signs(const FlowCategory& cat);

// Sweeps gradings upward, putting every step matrix of the chain complex into
// Smith normal form up to basis permutation and signs, using only handle
// slides (integer row/column additions, one slide per unit) interleaved with
// purify_signs. Diagonal entries are sign-normalized where a determinant-one
// slide sequence exists; a lone negative with no spare kernel direction is
// left negative. Homology is unchanged.
ReduceResult snf_reduce(const FlowCategory& cat);

// snf_reduce, then (per grading, ascending) normalizes every diagonal entry
// positive with a birthed helper pair, removes +/-1 entries by handle
// cancellation, and splits composite entries d = a*b (coprime prime-power a)
// into separate a and b entries via birth + slides. The result has diagonal
// chain matrices with every entry a positive prime power, and single-signed
// 0-dimensional moduli whose point counts equal the matrix entries.
ReduceResult primary_snf_reduce(const FlowCategory& cat);

}  // namespace flowcat
