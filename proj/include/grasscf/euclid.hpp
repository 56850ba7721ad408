#pragma once

#include "grasscf/bigint.hpp"
#include "grasscf/matrix.hpp"

#include <vector>

namespace grasscf {

// Classical subtractive Euclidean algorithm with regular continued
// fraction output. Each step maps (p, q) -> (q, p - a q) with a = floor(p/q)
// and is recorded as the 2x2 matrix [[0,1],[1,-a]]; the product of the step
// matrices (applied in order) sends (p0, q0) to (+-gcd, 0).
struct EuclidResult {
    Int gcd;                       // non-negative
    std::vector<Int> quotients;    // a_0, ..., a_N
    std::vector<IntMatrix> matrices;
};

EuclidResult euclid_cf(const Int& p0, const Int& q0);

// Jacobi-Perron multidimensional subtractive algorithm. Negative entries
// are first normalized by recorded sign flips; the main loop rotates and
// reduces against the second coordinate, swapping a zero second coordinate
// with the last active one and shrinking. Terminates with a single
// non-zero coordinate in slot 1.
struct JacobiPerronResult {
    Int gcd;                             // non-negative
    std::vector<std::vector<Int>> elements; // per-step quotient tuples
    IntMatrix matrix;                    // |det| = 1; matrix * input = (gcd, 0, ..., 0)
};

JacobiPerronResult jacobi_perron(const std::vector<Int>& x);

// Left-folds step matrices in application order: M_N * ... * M_1.
IntMatrix fold_matrices(const std::vector<IntMatrix>& matrices, int n);

} // namespace grasscf
