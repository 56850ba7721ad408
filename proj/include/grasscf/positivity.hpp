#pragma once

#include "grasscf/plucker.hpp"
#include "grasscf/transforms.hpp"

#include <vector>

namespace grasscf {

enum class Parity { Even, Odd };

struct PositivizeResult {
    PluckerVector vector;
    std::vector<UnimodularTransform> transforms; // sign flips and column swaps only
};

// Sends a zero-free G(2,n) Pluecker vector to an all-positive one by a
// signed permutation of the columns.
//
// Stage I flips every column i with p_{1,i} < 0, which places all columns
// in one open half-plane. Stage II orders the columns counterclockwise:
// by default a selection sort under the comparator "a precedes b iff
// p_{a,b} > 0" (a strict total order after Stage I); with literal_scan the
// classical rule is replayed verbatim: repeatedly swap the
// lexicographically first pair with a negative entry.
//
// Throws ZeroCoordinateError on any zero entry (the caller must route to
// dimension reduction instead) and ValidationError for k != 2.
PositivizeResult positivize_g2n(const PluckerVector& p, bool literal_scan = false);

// Parity of the number of negative entries. Invariant under sign flips and
// column swaps whenever C(n-2, k-1) and C(n-2, k-2) are both even (e.g.
// k = 3, n = 6), which obstructs positivization by signed permutations.
Parity negative_parity(const PluckerVector& p);

} // namespace grasscf
