#include "grasscf/mee.hpp"

#include "grasscf/errors.hpp"
#include "grasscf/euclid.hpp"
#include "grasscf/positivity.hpp"

#include <string>
#include <utility>

namespace grasscf {

namespace {

void record(MeeState& state, UnimodularTransform u, StageLabel label) {
    state.p = push_plucker(state.p, u);
    state.trace.steps.push_back(TraceStep{std::move(u), label, state.p.n()});
}

// Lexicographically first pair attaining the maximum, with (1, n) taking
// priority over any tie it participates in.
std::pair<int, int> select_max_pair(const PluckerVector& p, const Int& max_value) {
    const int n = p.n();
    if (p.skew(1, n) == max_value)
        return {1, n};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.skew(i, j) == max_value)
                return {i, j};
    throw InternalError("maximum not found; state: " + to_text(p));
}

} // namespace

MeeState make_mee_state(PluckerVector p) {
    if (p.k() != 2)
        throw ValidationError("maximal element elimination is defined for k = 2 only; "
                              "use minimal element elimination for larger k");
    Trace trace;
    trace.k = 2;
    trace.n_initial = p.n();
    return MeeState{std::move(p), std::move(trace)};
}

MeeState mee_step(MeeState state, const MeeOptions& options) {
    const int n = state.p.n();
    if (n <= 2)
        throw ValidationError("annulation pass requires n > 2");
    if (has_zero_entry(state.p))
        throw ZeroCoordinateError("annulation pass requires all entries non-zero; "
                                  "route to dimension reduction");

    // Stage I (skipped when already positive; identity steps are elided).
    if (!all_entries_positive(state.p)) {
        PositivizeResult pos = positivize_g2n(state.p, options.strict_positivize);
        for (UnimodularTransform& u : pos.transforms)
            state.trace.steps.push_back(TraceStep{std::move(u), StageLabel::Positivize, n});
        state.p = std::move(pos.vector);
    }

    const MaxAbs before = max_abs(state.p);

    // Stage II.
    auto [i, j] = select_max_pair(state.p, before.value);

    // Stage III: an adjacent maximum is rotated to (1, n) first.
    if (j == i + 1) {
        record(state, rotation_transform(n, i), StageLabel::MaxSelectRotate);
        if (state.p.skew(1, n) != before.value)
            throw InternalError("rotation did not move the maximum to (1, n); state: " +
                                to_text(state.p));
        i = 1;
        j = n;
    }

    // Stage IV: column j minus column j-1.
    Int q(1);
    if (options.accelerate) {
        const Int& anchor = state.p.skew(i, j - 1);
        Int candidate = floor_div(state.p.skew(i, j), anchor);
        if (candidate > 1) {
            bool safe = true;
            for (int a = 1; a <= n && safe; ++a) {
                if (a == j || a == j - 1)
                    continue;
                Int updated = state.p.skew(a, j) - candidate * state.p.skew(a, j - 1);
                safe = abs_of(updated) < before.value;
            }
            if (safe)
                q = std::move(candidate);
        }
    }
    record(state, elementary_subtract(n, j, j - 1, q), StageLabel::MaxSubtract);

    const MaxAbs after = max_abs(state.p);
    bool decreased = after.value < before.value ||
                     (after.value == before.value && after.count < before.count);
    if (!decreased)
        throw InternalError("annulation potential did not decrease; state: " + to_text(state.p));
    return state;
}

MeeState mee_dim_reduce(MeeState state) {
    const int n = state.p.n();
    auto zero = first_zero_index(state.p);
    if (!zero)
        throw ValidationError("dimension reduction requires a zero entry");
    const int s = zero->at(0);
    const int t = zero->at(1);

    // Stage I: move the zero pair to (1, 2), keeping the other columns in
    // their original relative order.
    if (s != 1 || t != 2) {
        std::vector<int> source{s, t};
        source.reserve(static_cast<std::size_t>(n));
        for (int c = 1; c <= n; ++c)
            if (c != s && c != t)
                source.push_back(c);
        record(state, permutation_transform(n, std::move(source)), StageLabel::Swap);
    }

    // Stage II: w_1 and w_2 are proportional; the ratio is visible through
    // any witness column i with p_{1,i} != 0.
    int witness = 0;
    for (int i = 3; i <= n; ++i) {
        if (state.p.skew(1, i) != 0) {
            witness = i;
            break;
        }
    }
    if (witness != 0) {
        EuclidResult euclid = euclid_cf(state.p.skew(2, witness), state.p.skew(1, witness));
        for (const Int& a : euclid.quotients) {
            if (a != 0)
                record(state, elementary_subtract(n, 2, 1, a), StageLabel::DimReductionEuclid);
            record(state, column_swap(n, 1, 2), StageLabel::DimReductionEuclid);
        }
        for (int i = 2; i <= n; ++i) {
            if (state.p.skew(1, i) != 0)
                throw InternalError("column 1 not annulled after Euclidean replay; state: " +
                                    to_text(state.p));
        }
    }
    // Otherwise every p_{1,i} is already zero, i.e. w_1 = 0.

    record(state, drop_to_last(n, 1), StageLabel::CoordinateDrop);
    state.p = restrict_drop_last(state.p);
    return state;
}

Trace mee_run(const PluckerVector& p, const MeeOptions& options) {
    MeeState state = make_mee_state(p);
    if (!check_relations(p))
        throw NonDecomposableError("input fails the Pluecker relations");

    while (state.p.n() > 2) {
        if (has_zero_entry(state.p))
            state = mee_dim_reduce(std::move(state));
        else
            state = mee_step(std::move(state), options);
    }
    state.trace.terminal_p_hat = state.p.at_rank(0);
    if (abs_of(*state.trace.terminal_p_hat) != plucker_gcd(p))
        throw InternalError("terminal coordinate does not equal the input gcd; got " +
                            to_decimal(*state.trace.terminal_p_hat));
    validate_trace_shape(state.trace);
    return std::move(state.trace);
}

} // namespace grasscf
