#pragma once

#include "grasscf/plucker.hpp"
#include "grasscf/transforms.hpp"

#include <optional>

namespace grasscf {

struct MineeState {
    PluckerVector p;
    Trace trace;
};

// Annulation target: the minimal entry i, the neighbor index j obtained by
// shifting slot t of i by one, and the 1-based slot t itself.
struct MineeSelection {
    SubsetIndex i;
    SubsetIndex j;
    int t = 0;
};

MineeState make_minee_state(PluckerVector p);

// Selects the entry with the minimal absolute value (lex-first on ties) and
// its neighbor: t is the minimal slot with a free adjacent index, preferring
// i_t - 1 over i_t + 1. Returns nullopt exactly when n = k (no free
// neighbor exists). Requires all entries non-zero.
std::optional<MineeSelection> minee_select(const PluckerVector& p);

// The descent-oriented subtraction: column j_t minus floor(p_j / p_i) times
// column i_t, which replaces p_j by its floored remainder mod p_i and leaves
// p_i untouched. Other entries containing j_t may grow.
UnimodularTransform minee_subtract_transform(const PluckerVector& p, const MineeSelection& sel);
PluckerVector minee_subtract(const PluckerVector& p, const MineeSelection& sel);

// General dimension reduction once an entry is zero: permute the zero index
// tuple to (1..k), read off the integer dependency among w_1..w_{s+1} from
// the bordered minors, annul w_1 with the inverse of the Jacobi-Perron
// matrix of the coefficients, and drop the dead coordinate. A column whose
// containing entries are all zero is dropped directly.
MineeState minee_dim_reduce(MineeState state);

// Runs minimal element elimination to G(k,k) for any k >= 1. Requires a
// decomposable input; |terminal p_hat| equals the gcd of the input entries.
Trace minee_run(const PluckerVector& p);

} // namespace grasscf
