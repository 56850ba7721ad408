#pragma once

#include "grasscf/plucker.hpp"
#include "grasscf/transforms.hpp"

namespace grasscf {

struct MeeOptions {
    // Replay the literal lexicographic-scan positivization (more recorded
    // swaps, byte-reproducible against the classical description).
    bool strict_positivize = false;
    // Subtract q = floor(max / left-neighbor) times per pass when that
    // provably keeps every affected entry below the old maximum.
    bool accelerate = false;
};

struct MeeState {
    PluckerVector p;
    Trace trace;
};

MeeState make_mee_state(PluckerVector p);

// One full annulation pass for G(2,n): positivize, select the maximal
// entry (ties broken lexicographically, except that (1,n) wins every tie
// it attains), rotate an adjacent maximum to (1,n), then subtract column
// j-1 from column j. The potential (max |entry|, count at max) strictly
// decreases lexicographically. Requires n > 2 and no zero entries.
MeeState mee_step(MeeState state, const MeeOptions& options = {});

// Dimension reduction for G(2,n) once some entry is zero: permute the zero
// pair to (1,2), annul column 1 by replaying the Euclidean algorithm on
// (p_{2,i}, p_{1,i}) as column operations, then drop the dead coordinate.
MeeState mee_dim_reduce(MeeState state);

// Runs maximal element elimination to G(2,2). Requires k = 2 and a
// decomposable input; |terminal p_hat| equals the gcd of the input entries.
Trace mee_run(const PluckerVector& p, const MeeOptions& options = {});

} // namespace grasscf
