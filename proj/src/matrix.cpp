#include "grasscf/matrix.hpp"

#include "grasscf/errors.hpp"

#include <utility>

namespace grasscf {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ValidationError("matrix dimensions must be non-negative");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product dimension mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int l = 0; l < a.cols(); ++l) {
            const Int& x = a.at(i, l);
            if (x == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(l, j) != 0)
                    r.at(i, j) += x * b.at(l, j);
            }
        }
    }
    return r;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(j, i) = a.at(i, j);
    return r;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionError("determinant requires a square matrix");
    const int n = a.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return a.at(0, 0);
    if (n == 2)
        return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);

    IntMatrix m = a;
    int sign = 1;
    Int prev(1);
    for (int c = 0; c + 1 < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return 0;
        if (pivot != c) {
            for (int j = c; j < n; ++j)
                std::swap(m.at(c, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j) {
                Int numer = m.at(r, j) * m.at(c, c) - m.at(r, c) * m.at(c, j);
                m.at(r, j) = exact_div(numer, prev);
            }
            m.at(r, c) = 0;
        }
        prev = m.at(c, c);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

Int parse_int(const std::string& text) {
    if (text.empty())
        throw ValidationError("empty integer literal");
    std::size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (start == text.size())
        throw ValidationError("integer literal '" + text + "' has no digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ValidationError("invalid integer literal '" + text + "'");
    }
    return Int(text, 10);
}

} // namespace grasscf
