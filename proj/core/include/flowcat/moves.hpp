#pragma once

// The move engine: handle slides, intermediate-category construction, general
// handle cancellation, point-pair cancellation (the dimension-0 extended
// Whitney trick), circle normalization (its dimension-1 instance), and birth
// of cancelling pairs. Each move is a pure category-to-category function that
// throws MoveError when preconditions fail and preserves validity otherwise.

#include <string>
#include <variant>
#include <vector>

#include "flowcat/category.hpp"
#include "flowcat/errors.hpp"

namespace flowcat {

struct SlideMove {
  std::string x, y;
  int sigma;  // +1 or -1
  friend bool operator==(const SlideMove&, const SlideMove&) = default;
};
struct WhitneyMove {
  std::string x, y, pos, neg;
  friend bool operator==(const WhitneyMove&, const WhitneyMove&) = default;
};
struct NormalizeMove {
  std::string a, b;
  friend bool operator==(const NormalizeMove&, const NormalizeMove&) = default;
};
struct IntermediateMove {
  std::string x, y;
  int sigma;
  friend bool operator==(const IntermediateMove&, const IntermediateMove&) = default;
};
struct CancelMove {
  std::string u, l;
  friend bool operator==(const CancelMove&, const CancelMove&) = default;
};
struct BirthMove {
  std::string u, l;
  int grading;
  friend bool operator==(const BirthMove&, const BirthMove&) = default;
};

using Move = std::variant<SlideMove, WhitneyMove, NormalizeMove, IntermediateMove,
                          CancelMove, BirthMove>;

// Slides x over y (both at grading i, x != y) with sign sigma. Object ids are
// kept stable; copied moduli components receive fresh "_c"-suffixed ids.
//
// 0-dimensional: M(x,b) gains a copy of M(y,b) (signs kept for sigma=+,
// flipped for sigma=-); M(a,y) gains a copy of M(a,x) (signs flipped for
// sigma=+, kept for sigma=-); M(a,x) is untouched.
// 1-dimensional: M(a,y) with |a|=i+2 gains copies of M(a,x) components (fr /
// label kept for sigma=-, incremented for sigma=+), endpoints re-pointed
// through the copied points of M(z,y); M(a,b) with |a|=i+1,|b|=i-1 keeps all
// old components and gains one interval I_{B,A} per (B,A) in M(y,b) x M(a,x)
// with fr = eps_B for sigma=- and 1+eps_B for sigma=+, running from
// (via y: B, copy-of-A) to (via x: copy-of-B, A); M(x,b) with |b|=i-2 gains
// copies of M(y,b) components with fr/label unchanged for both signs,
// endpoints re-pointed through the copies in M(x,z).
FlowCategory handle_slide(const FlowCategory& cat, const std::string& x,
                          const std::string& y, int sigma);

// Adds e (grading i) and f (grading i+1) with M(f,x) = one + point,
// M(f,e) = one - point, M(f,y) = one point of sign sigma, M(e,b) = a copy of
// M(x,b) disjoint-union a copy of M(y,b) (y-part point signs flipped iff
// sigma=-; 1-dimensional parts keep fr/label, endpoints re-pointed through
// the copied points), and M(f,b) for |b| = i-1 one interval per point of
// M(e,b): fr 0 over the x-part, fr = eps_B (sigma=-) / 1+eps_B (sigma=+)
// over the y-part, each running from (via e: copy, the f->e point) to
// (via x or y: original, the f->x or f->y point).
// Cancelling (f,e) afterwards restores the input; cancelling (f,x) performs
// the slide.
FlowCategory intermediate_category(const FlowCategory& cat, const std::string& x,
                                   const std::string& y, int sigma);

// Cancels the pair (u,l) where M(u,l) is a single point of sign eps: u, l and
// their moduli are removed; every surviving M(a,b) with the right gradings
// gains composite points (B,A) with sign -eps*sign(B)*sign(A); 1-dimensional
// moduli are reassembled from product bands {B}xJ (fr = fr(J)+1+eps_B) and
// J'x{A} (fr = fr(J')) glued onto the old components at their ends through u
// and l, with fr adding over concatenated pieces and closed chains becoming
// circles; product circles {B}xS get label(S)+1+eps_B, S'x{A} keeps label(S').
FlowCategory handle_cancel(const FlowCategory& cat, const std::string& u,
                           const std::string& l);

// Deletes the cancelling pair pos (sign +) / neg (sign -) of M(x,y) and glues
// interval endpoints pairwise: (via x: pos, A) to (via x: neg, A) in M(a,y)
// for every A in M(a,x), and (via y: B, pos) to (via y: B, neg) in M(x,b) for
// every B in M(y,b). Each gluing band adds +1 to fr; chains closing up become
// circles with label = sum of fr + number of bands (mod 2).
FlowCategory whitney_cancel_points(const FlowCategory& cat, const std::string& x,
                                   const std::string& y, const std::string& pos,
                                   const std::string& neg);

// Replaces the circle multiset of M(a,b) by a single label-0 circle if the
// number of label-0 circles was odd, and nothing otherwise (arithmetic in the
// order-two framed cobordism group). Intervals are untouched.
FlowCategory normalize_circles(const FlowCategory& cat, const std::string& a,
                               const std::string& b);

// Adds objects u (grading g+1) and l (grading g) with M(u,l) a single
// positive point.
FlowCategory birth(const FlowCategory& cat, const std::string& u,
                   const std::string& l, int grading);

FlowCategory apply_move(const FlowCategory& cat, const Move& move);

// One applied move, bracketed by digests of the canonical serialization.
struct LogEntry {
  Move move;
  std::string digest_before, digest_after;
};

struct MoveLog {
  std::vector<LogEntry> entries;
};

// Applies the move and appends a digest-bracketed entry to the log.
FlowCategory apply_logged(const FlowCategory& cat, const Move& move, MoveLog& log);

// Replays a log, verifying every digest; throws std::runtime_error on drift.
FlowCategory replay(FlowCategory cat, const MoveLog& log);

}  // namespace flowcat
