#pragma once

#include "grasscf/plucker.hpp"
#include "grasscf/transforms.hpp"

#include <string>
#include <vector>

namespace grasscf {

// Independent re-check of a completed trace against the vector it claims
// to reduce. Works from the recorded matrices alone (descriptors are not
// required), so it applies equally to deserialized traces.
struct VerifyReport {
    struct Check {
        std::string name;
        bool passed = false;
        std::string detail;
    };
    std::vector<Check> checks;

    bool all_passed() const {
        for (const Check& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

// Checks, in order:
//   trace_shape          dimensions weakly decrease, drops match n - k
//   unimodular_matrices  every step matrix has determinant +-1
//   pushforward_replay   replaying the steps reaches the single coordinate
//                        p_hat, with only dead entries removed at drops
//   descent_certificates max-subtract steps lexicographically decrease
//                        (max, count); min-subtract steps decrease the
//                        non-zero minimum or create a zero
//   terminal_gcd         |p_hat| equals the gcd of the input entries
//   reconstruction       the rebuilt k x n matrix reproduces the input
VerifyReport verify_trace(const Trace& trace, const PluckerVector& original);

} // namespace grasscf
