#include "grasscf/minee.hpp"

#include "grasscf/errors.hpp"
#include "grasscf/euclid.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace grasscf {

namespace {

void record(MineeState& state, UnimodularTransform u, StageLabel label) {
    state.p = push_plucker(state.p, u);
    state.trace.steps.push_back(TraceStep{std::move(u), label, state.p.n()});
}

// Largest s in [0, k-1] such that some non-zero entry contains {1..s}.
// The bordering condition (every entry containing {1..s+1} vanishes) is
// automatic from maximality.
int dependency_prefix(const PluckerVector& p) {
    const int k = p.k();
    int s = 0;
    std::vector<int> subset = first_subset(k);
    std::size_t rank = 0;
    do {
        if (p.at_rank(rank) != 0) {
            int len = 0;
            while (len < k && subset[static_cast<std::size_t>(len)] == len + 1)
                ++len;
            s = std::max(s, len);
        }
        ++rank;
    } while (next_subset(subset, p.n()));
    if (s >= k)
        throw InternalError("dependency prefix reached k although p_{1..k} = 0; state: " +
                            to_text(p));
    return s;
}

// Lex-first tail (i_{s+1}, ..., i_k) with p_{1..s,tail} != 0. Entries whose
// tail touches s+1 are zero by the prefix maximality, so the tail skips it
// on its own.
std::vector<int> dependency_tail(const PluckerVector& p, int s) {
    const int k = p.k();
    std::vector<int> subset = first_subset(k);
    std::size_t rank = 0;
    do {
        if (p.at_rank(rank) != 0) {
            bool prefix_ok = true;
            for (int a = 0; a < s; ++a)
                prefix_ok &= subset[static_cast<std::size_t>(a)] == a + 1;
            if (prefix_ok)
                return std::vector<int>(subset.begin() + s, subset.end());
        }
        ++rank;
    } while (next_subset(subset, p.n()));
    throw InternalError("no non-zero entry with dependency prefix; state: " + to_text(p));
}

} // namespace

MineeState make_minee_state(PluckerVector p) {
    Trace trace;
    trace.k = p.k();
    trace.n_initial = p.n();
    return MineeState{std::move(p), std::move(trace)};
}

std::optional<MineeSelection> minee_select(const PluckerVector& p) {
    const int k = p.k();
    const int n = p.n();
    if (has_zero_entry(p))
        throw ZeroCoordinateError("annulation selection requires all entries non-zero");

    // Minimal |entry|, lex-first among ties.
    std::size_t best_rank = 0;
    Int best = abs_of(p.at_rank(0));
    for (std::size_t r = 1; r < p.size(); ++r) {
        Int a = abs_of(p.at_rank(r));
        if (a < best) {
            best = std::move(a);
            best_rank = r;
        }
    }
    SubsetIndex i = SubsetIndex::unrank(best_rank, k, n);

    for (int slot = 0; slot < k; ++slot) {
        int value = i.at(slot);
        bool down = value - 1 >= 1 && !i.contains(value - 1);
        bool up = value + 1 <= n && !i.contains(value + 1);
        if (!down && !up)
            continue;
        std::vector<int> replaced = i.indices();
        replaced[static_cast<std::size_t>(slot)] = down ? value - 1 : value + 1;
        return MineeSelection{std::move(i), SubsetIndex(std::move(replaced), n), slot + 1};
    }
    return std::nullopt; // only possible when i = (1..n), i.e. n = k
}

UnimodularTransform minee_subtract_transform(const PluckerVector& p, const MineeSelection& sel) {
    const Int& pi = p.at(sel.i);
    if (pi == 0)
        throw ValidationError("subtraction requires a non-zero minimal entry");
    Int q = floor_div(p.at(sel.j), pi);
    int it = sel.i.at(sel.t - 1);
    int jt = sel.j.at(sel.t - 1);
    return elementary_subtract(p.n(), jt, it, q);
}

PluckerVector minee_subtract(const PluckerVector& p, const MineeSelection& sel) {
    return push_plucker(p, minee_subtract_transform(p, sel));
}

MineeState minee_dim_reduce(MineeState state) {
    const int k = state.p.k();
    const int n = state.p.n();

    // Pre-pass: a column whose containing entries all vanish is a zero
    // vector; send it to slot 1 and drop it.
    for (int m = 1; m <= n; ++m) {
        bool dead = true;
        std::vector<int> subset = first_subset(k);
        std::size_t rank = 0;
        do {
            if (state.p.at_rank(rank) != 0 &&
                std::find(subset.begin(), subset.end(), m) != subset.end()) {
                dead = false;
                break;
            }
            ++rank;
        } while (next_subset(subset, n));
        if (!dead)
            continue;
        if (m != 1) {
            std::vector<int> source{m};
            source.reserve(static_cast<std::size_t>(n));
            for (int c = 1; c <= n; ++c)
                if (c != m)
                    source.push_back(c);
            record(state, permutation_transform(n, std::move(source)), StageLabel::Swap);
        }
        record(state, drop_to_last(n, 1), StageLabel::CoordinateDrop);
        state.p = restrict_drop_last(state.p);
        return state;
    }

    auto zero = first_zero_index(state.p);
    if (!zero)
        throw ValidationError("dimension reduction requires a zero entry");

    // Stage I: permute the zero index tuple to (1..k).
    {
        bool already = true;
        for (int a = 0; a < k; ++a)
            already &= zero->at(a) == a + 1;
        if (!already) {
            std::vector<int> source = zero->indices();
            source.reserve(static_cast<std::size_t>(n));
            for (int c = 1; c <= n; ++c)
                if (!zero->contains(c))
                    source.push_back(c);
            record(state, permutation_transform(n, std::move(source)), StageLabel::Swap);
        }
    }

    // Stage II: locate the dependency among w_1..w_{s+1}.
    const int s = dependency_prefix(state.p);
    const std::vector<int> tail = dependency_tail(state.p, s);

    // Stage III: bordered-minor coefficients of the dependency
    //   sum_j a_j w_j = 0,  a_j = (-1)^(j-1) p[{1..s+1} minus j, tail].
    std::vector<Int> coeffs(static_cast<std::size_t>(s) + 1);
    {
        std::vector<int> tuple(static_cast<std::size_t>(k));
        for (int j = 1; j <= s + 1; ++j) {
            int w = 0;
            for (int c = 1; c <= s + 1; ++c)
                if (c != j)
                    tuple[static_cast<std::size_t>(w++)] = c;
            for (int c : tail)
                tuple[static_cast<std::size_t>(w++)] = c;
            const Int& entry = state.p.at(SubsetIndex(tuple, n));
            coeffs[static_cast<std::size_t>(j) - 1] = (j % 2 == 1) ? entry : Int(-entry);
        }
    }

    // Stage IV: annul w_1.
    bool all_zero = true;
    for (const Int& a : coeffs)
        all_zero &= a == 0;
    if (all_zero) {
        // Defensive branch: unreachable, since a_{s+1} = +-p_{1..s,tail} != 0
        // by the Stage II choice. Kept as the direct swap-out of the zero
        // column w_{s+1}.
        if (s > 0)
            record(state, column_swap(n, 1, s + 1), StageLabel::Swap);
    } else {
        JacobiPerronResult jp = jacobi_perron(coeffs);
        // U a = (g, 0, .., 0), so column 1 of U^{-1} is a/g and the column
        // action of U^{-1} (padded by identity) sends w_1 to (1/g) sum a_j w_j = 0.
        IntMatrix padded = IntMatrix::identity(n);
        for (int r = 0; r <= s; ++r)
            for (int c = 0; c <= s; ++c)
                padded.at(r, c) = jp.matrix.at(r, c);
        record(state, invert(general_transform(std::move(padded))), StageLabel::DimReductionJP);
    }

    {
        std::vector<int> subset = first_subset(k);
        std::size_t rank = 0;
        do {
            if (subset[0] == 1 && state.p.at_rank(rank) != 0)
                throw InternalError("column 1 not annulled by dimension reduction; state: " +
                                    to_text(state.p));
            ++rank;
        } while (next_subset(subset, n));
    }

    record(state, drop_to_last(n, 1), StageLabel::CoordinateDrop);
    state.p = restrict_drop_last(state.p);
    return state;
}

Trace minee_run(const PluckerVector& p) {
    if (!check_relations(p))
        throw NonDecomposableError("input fails the Pluecker relations");
    MineeState state = make_minee_state(p);

    while (state.p.n() > state.p.k()) {
        if (has_zero_entry(state.p)) {
            state = minee_dim_reduce(std::move(state));
            continue;
        }
        std::optional<Int> before = min_nonzero_abs(state.p);
        auto sel = minee_select(state.p);
        if (!sel)
            throw InternalError("no admissible neighbor although n > k; state: " +
                                to_text(state.p));
        UnimodularTransform u = minee_subtract_transform(state.p, *sel);
        record(state, std::move(u), StageLabel::MinSubtract);
        if (!has_zero_entry(state.p)) {
            std::optional<Int> after = min_nonzero_abs(state.p);
            if (!after || !before || !(*after < *before))
                throw InternalError("annulation minimum did not decrease; state: " +
                                    to_text(state.p));
        }
    }
    state.trace.terminal_p_hat = state.p.at_rank(0);
    if (abs_of(*state.trace.terminal_p_hat) != plucker_gcd(p))
        throw InternalError("terminal coordinate does not equal the input gcd; got " +
                            to_decimal(*state.trace.terminal_p_hat));
    validate_trace_shape(state.trace);
    return std::move(state.trace);
}

} // namespace grasscf
