#pragma once

#include "grasscf/bigint.hpp"

#include <vector>

namespace grasscf {

// Dense integer matrix, row-major. Row/column accessors are 0-based;
// the 1-based column numbering of the transform API is translated at the
// call sites.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

// A k x n matrix whose rows are the spanning vectors v_1..v_k; its columns
// are the coordinate vectors w_1..w_n.
using LatticeMatrix = IntMatrix;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

// Exact determinant by fraction-free Bareiss elimination with row pivoting.
Int determinant(const IntMatrix& a);

} // namespace grasscf
