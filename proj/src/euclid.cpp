#include "grasscf/euclid.hpp"

#include "grasscf/errors.hpp"

#include <utility>

namespace grasscf {

EuclidResult euclid_cf(const Int& p0, const Int& q0) {
    if (p0 == 0 && q0 == 0)
        throw ValidationError("euclid_cf requires a non-zero pair");
    EuclidResult result;
    Int p = p0;
    Int q = q0;
    while (q != 0) {
        Int a = floor_div(p, q);
        Int r = p - a * q;
        if (!(abs_of(r) < abs_of(q)))
            throw InternalError("euclid_cf descent violated"); // |remainder| < |divisor| always
        IntMatrix m(2, 2);
        m.at(0, 1) = 1;
        m.at(1, 0) = 1;
        m.at(1, 1) = -a;
        result.matrices.push_back(std::move(m));
        result.quotients.push_back(std::move(a));
        p = q;
        q = std::move(r);
    }
    result.gcd = abs_of(p);
    return result;
}

JacobiPerronResult jacobi_perron(const std::vector<Int>& input) {
    const int m = static_cast<int>(input.size());
    if (m < 1)
        throw ValidationError("jacobi_perron requires a non-empty vector");
    bool any_nonzero = false;
    for (const Int& v : input)
        any_nonzero |= v != 0;
    if (!any_nonzero)
        throw ValidationError("jacobi_perron requires a non-zero vector");

    JacobiPerronResult result;
    result.matrix = IntMatrix::identity(m);
    std::vector<Int> x = input;

    // Sign normalization; the subtractive loop assumes non-negative entries.
    for (int i = 0; i < m; ++i) {
        if (x[static_cast<std::size_t>(i)] < 0) {
            x[static_cast<std::size_t>(i)] = -x[static_cast<std::size_t>(i)];
            for (int j = 0; j < m; ++j)
                result.matrix.at(i, j) = -result.matrix.at(i, j);
        }
    }

    int active = m;
    while (active > 1) {
        Int& second = x[1];
        if (second == 0) {
            int last = active - 1; // 0-based slot of the last active coordinate
            if (last != 1 && x[static_cast<std::size_t>(last)] != 0) {
                std::swap(x[1], x[static_cast<std::size_t>(last)]);
                for (int j = 0; j < m; ++j)
                    std::swap(result.matrix.at(1, j), result.matrix.at(last, j));
            }
            --active;
            continue;
        }
        // One rotate-and-reduce step against the second coordinate.
        std::vector<Int> element;
        element.reserve(static_cast<std::size_t>(active) - 1);
        std::vector<Int> next(static_cast<std::size_t>(active));
        IntMatrix step(active, active);
        next[0] = second;
        step.at(0, 1) = 1;
        for (int j = 1; j + 1 < active; ++j) {
            Int q = floor_div(x[static_cast<std::size_t>(j) + 1], second);
            next[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j) + 1] - q * second;
            step.at(j, j + 1) = 1;
            step.at(j, 1) = -q;
            element.push_back(std::move(q));
        }
        {
            Int q = floor_div(x[0], second);
            next[static_cast<std::size_t>(active) - 1] = x[0] - q * second;
            step.at(active - 1, 0) = 1;
            step.at(active - 1, 1) = -q;
            element.push_back(std::move(q));
        }
        if (!(next[1] < second))
            throw InternalError("jacobi_perron descent violated");
        for (int j = 0; j < active; ++j)
            x[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j)];
        // Accumulate: matrix <- pad(step) * matrix (rows beyond `active` are
        // untouched identity slots).
        {
            IntMatrix updated = result.matrix;
            for (int r = 0; r < active; ++r) {
                for (int c = 0; c < m; ++c) {
                    Int sum(0);
                    for (int l = 0; l < active; ++l) {
                        if (step.at(r, l) != 0)
                            sum += step.at(r, l) * result.matrix.at(l, c);
                    }
                    updated.at(r, c) = std::move(sum);
                }
            }
            result.matrix = std::move(updated);
        }
        result.elements.push_back(std::move(element));
    }
    result.gcd = x[0];
    if (result.gcd <= 0)
        throw InternalError("jacobi_perron terminated without a positive gcd slot");
    return result;
}

IntMatrix fold_matrices(const std::vector<IntMatrix>& matrices, int n) {
    IntMatrix acc = IntMatrix::identity(n);
    for (const IntMatrix& m : matrices)
        acc = multiply(m, acc);
    return acc;
}

} // namespace grasscf
