#include "grasscf/positivity.hpp"

#include "grasscf/errors.hpp"

#include <string>
#include <utility>

namespace grasscf {

PositivizeResult positivize_g2n(const PluckerVector& p, bool literal_scan) {
    if (p.k() != 2)
        throw ValidationError("positivization by signed permutations exists for k = 2 only");
    if (has_zero_entry(p))
        throw ZeroCoordinateError("positivization requires all entries non-zero");

    const int n = p.n();
    PositivizeResult result{p, {}};
    auto record = [&](UnimodularTransform u) {
        result.vector = push_plucker(result.vector, u);
        result.transforms.push_back(std::move(u));
    };

    // Stage I: make every p_{1,i} positive.
    for (int i = 2; i <= n; ++i) {
        if (result.vector.skew(1, i) < 0)
            record(sign_flip(n, i));
    }

    // Stage II: order columns 2..n counterclockwise.
    if (literal_scan) {
        const std::size_t swap_bound = binomial(n, 2);
        std::size_t swaps = 0;
        for (;;) {
            int si = 0, sj = 0;
            for (int i = 1; i <= n && si == 0; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (result.vector.skew(i, j) < 0) {
                        si = i;
                        sj = j;
                        break;
                    }
            if (si == 0)
                break;
            record(column_swap(n, si, sj));
            if (++swaps > swap_bound)
                throw InternalError("literal positivization exceeded C(n,2) swaps");
        }
    } else {
        for (int pos = 2; pos < n; ++pos) {
            int best = pos;
            for (int c = pos + 1; c <= n; ++c) {
                if (result.vector.skew(c, best) > 0) // column c precedes column best
                    best = c;
            }
            if (best != pos)
                record(column_swap(n, pos, best));
        }
    }

    if (!all_entries_positive(result.vector))
        throw ValidationError("positivization failed: the comparator is not a total order, "
                              "so the input is not a decomposable Pluecker vector");
    return result;
}

Parity negative_parity(const PluckerVector& p) {
    std::size_t negatives = 0;
    for (const Int& e : p.entries()) {
        if (e == 0)
            throw ValidationError("negative_parity requires all entries non-zero");
        if (e < 0)
            ++negatives;
    }
    return negatives % 2 == 0 ? Parity::Even : Parity::Odd;
}

} // namespace grasscf
