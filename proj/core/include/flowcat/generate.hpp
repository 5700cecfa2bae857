#pragma once

// Seeded random generation of valid flow categories, used for property
// testing and fuzzing. All output is deterministic in the seed.

#include <cstdint>

#include "flowcat/category.hpp"

namespace flowcat {

struct GenerateOptions {
  int max_objects = 8;       // hard cap on object count
  int min_gradings = 3;      // inclusive
  int max_gradings = 4;      // inclusive
  int max_points = 3;        // per two-point moduli space
  int max_scramble = 3;      // random slides applied after skeleton assembly
  bool allow_circles = true; // sprinkle free circles on grading-gap-2 pairs
};

// Returns a valid category: a direct sum of two-object pieces and lone
// objects, optionally decorated with circles and scrambled by slides.
// Every moduli space respects opts.max_points, validate() reports no
// violations, and at least one grading carries two or more objects.
FlowCategory random_category(std::uint64_t seed, const GenerateOptions& opts = {});

// Two categories with homology supported in degrees n and n+1 and
// isomorphic homology, built from the same invariant-factor data but
// assembled and scrambled differently (including extra acyclic pieces).
struct MoorePair {
  FlowCategory first, second;
  int degree = 0;  // n: homology lives in degrees n and n+1
};

MoorePair random_moore_pair(std::uint64_t seed);

}  // namespace flowcat
