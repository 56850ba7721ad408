#pragma once

// Shared helpers and independent oracles for the test suite. The oracles
// deliberately avoid the library's computation paths: determinants are
// expanded by minors instead of Bareiss, gcds use a plain remainder loop
// instead of mpz_gcd.

#include "grasscf/matrix.hpp"
#include "grasscf/plucker.hpp"
#include "grasscf/subset.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using grasscf::Int;
using grasscf::IntMatrix;
using grasscf::LatticeMatrix;
using grasscf::PluckerVector;

inline LatticeMatrix make_matrix(int rows, int cols, const std::vector<long>& values) {
    LatticeMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = values[static_cast<std::size_t>(r * cols + c)];
    return m;
}

inline PluckerVector make_plucker(int k, int n, const std::vector<long>& values) {
    std::vector<Int> entries(values.begin(), values.end());
    return PluckerVector(k, n, std::move(entries));
}

// Determinant by recursive expansion along the first row.
inline Int det_minor_expansion(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 1)
        return m.at(0, 0);
    Int acc(0);
    IntMatrix sub(n - 1, n - 1);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c) == 0)
            continue;
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c)
                    continue;
                sub.at(r - 1, cc++) = m.at(r, j);
            }
        }
        Int term = m.at(0, c) * det_minor_expansion(sub);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Pluecker vector through the oracle determinant.
inline std::vector<Int> plucker_by_minors(const LatticeMatrix& m) {
    const int k = m.rows();
    const int n = m.cols();
    std::vector<Int> out;
    std::vector<int> cols = grasscf::first_subset(k);
    IntMatrix sub(k, k);
    do {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                sub.at(r, c) = m.at(r, cols[static_cast<std::size_t>(c)] - 1);
        out.push_back(det_minor_expansion(sub));
    } while (grasscf::next_subset(cols, n));
    return out;
}

// gcd of absolute values by remainder loop.
inline Int gcd_by_remainders(const std::vector<Int>& values) {
    Int g(0);
    for (Int v : values) {
        if (v < 0)
            v = -v;
        while (v != 0) {
            Int r = g % v;
            if (r < 0)
                r += v;
            g = v;
            v = r;
        }
    }
    return g;
}

inline Int draw_int(std::mt19937_64& gen, long bound) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return Int(static_cast<long>(gen() % span) - bound);
}

inline LatticeMatrix random_matrix(std::mt19937_64& gen, int k, int n, long bound) {
    LatticeMatrix m(k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) = draw_int(gen, bound);
    return m;
}

inline bool is_full_rank(const LatticeMatrix& m) {
    for (const Int& v : plucker_by_minors(m))
        if (v != 0)
            return true;
    return false;
}

inline LatticeMatrix random_full_rank(std::mt19937_64& gen, int k, int n, long bound) {
    for (;;) {
        LatticeMatrix m = random_matrix(gen, k, n, bound);
        if (is_full_rank(m))
            return m;
    }
}

// Full-rank with every maximal minor non-zero (needed by positivization).
inline LatticeMatrix random_zero_free(std::mt19937_64& gen, int k, int n, long bound) {
    for (;;) {
        LatticeMatrix m = random_matrix(gen, k, n, bound);
        bool ok = true;
        for (const Int& v : plucker_by_minors(m))
            ok &= v != 0;
        if (ok)
            return m;
    }
}

} // namespace testsupport
