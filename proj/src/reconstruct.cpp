#include "grasscf/reconstruct.hpp"

#include "grasscf/errors.hpp"

#include <string>
#include <utility>

namespace grasscf {

namespace {

LatticeMatrix with_zero_column(const LatticeMatrix& m) {
    LatticeMatrix out(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.at(r, c) = m.at(r, c);
    return out;
}

LatticeMatrix replay_inverse(const Trace& trace, LatticeMatrix seed) {
    validate_trace_shape(trace);
    if (!trace.complete())
        throw ValidationError("reconstruction requires a completed trace");
    if (seed.rows() != trace.k || seed.cols() != trace.k)
        throw DimensionError("seed must be a k x k matrix");

    LatticeMatrix current = std::move(seed);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        const TraceStep& step = *it;
        if (step.label == StageLabel::CoordinateDrop) {
            if (current.cols() + 1 != step.ambient_n)
                throw ValidationError("trace drop does not match replay dimension");
            current = with_zero_column(current);
        } else if (current.cols() != step.ambient_n) {
            throw ValidationError("trace step does not match replay dimension");
        }
        current = apply_matrix(invert(step.transform), current);
    }
    if (current.cols() != trace.n_initial)
        throw ValidationError("trace does not rebuild the initial dimension");
    return current;
}

} // namespace

ReconstructionResult assemble(const Trace& trace, const PluckerVector& original) {
    if (!trace.complete())
        throw ValidationError("reconstruction requires a completed trace");
    if (trace.k != original.k() || trace.n_initial != original.n())
        throw DimensionError("trace dimensions do not match the original vector");

    const Int& p_hat = *trace.terminal_p_hat;
    LatticeMatrix seed(trace.k, trace.k);
    seed.at(0, 0) = p_hat;
    for (int i = 1; i < trace.k; ++i)
        seed.at(i, i) = 1;

    LatticeMatrix matrix = replay_inverse(trace, std::move(seed));
    PluckerVector rebuilt = compute_plucker(matrix);
    if (rebuilt != original) {
        // The seeded sign tracks the forward run, so a mismatch can only be
        // one global sign; fix it by negating row 1.
        for (int c = 0; c < matrix.cols(); ++c)
            matrix.at(0, c) = -matrix.at(0, c);
        rebuilt = compute_plucker(matrix);
        if (rebuilt != original)
            throw InternalError("reconstruction does not reproduce the input vector: got " +
                                to_text(rebuilt));
    }
    return ReconstructionResult{std::move(matrix), p_hat, abs_of(p_hat)};
}

LatticeMatrix admissible_tuple(const Trace& trace, const LatticeMatrix& seed) {
    if (!trace.complete())
        throw ValidationError("reconstruction requires a completed trace");
    if (seed.rows() != trace.k || seed.cols() != trace.k)
        throw DimensionError("seed must be a k x k matrix");
    if (abs_of(determinant(seed)) != abs_of(*trace.terminal_p_hat))
        throw ValidationError("seed determinant must equal |p_hat| = " +
                              to_decimal(abs_of(*trace.terminal_p_hat)));
    return replay_inverse(trace, seed);
}

Int sublattice_index(const LatticeMatrix& matrix) {
    return plucker_gcd(compute_plucker(matrix));
}

} // namespace grasscf
