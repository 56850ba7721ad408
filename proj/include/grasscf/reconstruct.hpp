#pragma once

#include "grasscf/matrix.hpp"
#include "grasscf/plucker.hpp"
#include "grasscf/transforms.hpp"

namespace grasscf {

struct ReconstructionResult {
    LatticeMatrix matrix;  // k x n, Pluecker vector equals the original exactly
    Int p_hat;             // terminal coordinate, signed
    Int sublattice_index;  // |p_hat| = gcd of the original entries
};

// Rebuilds a k-tuple of integer vectors realizing the traced vector: seeds
// with rows (p_hat e_1, e_2, ..., e_k) at dimension k, then walks the trace
// backwards, re-inserting a zero coordinate at each drop and applying the
// inverse transform of every step. The result reproduces the original
// vector exactly (row 1 is negated if the global sign came out reversed).
ReconstructionResult assemble(const Trace& trace, const PluckerVector& original);

// Same replay from a caller-provided k x k seed with |det| = |p_hat|. The
// output realizes the original vector up to one global sign; all valid
// seeds span the same rational row space.
LatticeMatrix admissible_tuple(const Trace& trace, const LatticeMatrix& seed);

// Index of the sublattice generated by the rows inside the integer lattice
// of their span: gcd of the maximal minors.
Int sublattice_index(const LatticeMatrix& matrix);

} // namespace grasscf
