#include "grasscf/transforms.hpp"

#include "grasscf/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace grasscf {

namespace {

void check_column(int n, int c, const char* what) {
    if (c < 1 || c > n)
        throw ValidationError(std::string(what) + " column out of range [1, n]");
}

// (source, sign) pair describing a signed permutation: new column j is
// sign[j] * old column source[j] (1-based values in source).
struct SignedPerm {
    std::vector<int> source;
    std::vector<int> sign;
};

SignedPerm signed_perm_of(const UnimodularTransform& u) {
    const int n = u.n();
    SignedPerm sp;
    sp.source.assign(static_cast<std::size_t>(n) + 1, 0);
    sp.sign.assign(static_cast<std::size_t>(n) + 1, 1);
    const IntMatrix& a = u.matrix();
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n; ++r) {
            const Int& v = a.at(r, j);
            if (v == 0)
                continue;
            sp.source[static_cast<std::size_t>(j) + 1] = r + 1;
            sp.sign[static_cast<std::size_t>(j) + 1] = v > 0 ? 1 : -1;
        }
    }
    return sp;
}

bool matrix_is_signed_permutation(const IntMatrix& a) {
    if (a.rows() != a.cols())
        return false;
    const int n = a.rows();
    std::vector<bool> row_used(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
        int nonzero = -1;
        for (int r = 0; r < n; ++r) {
            const Int& v = a.at(r, j);
            if (v == 0)
                continue;
            if (nonzero >= 0 || (v != 1 && v != -1))
                return false;
            nonzero = r;
        }
        if (nonzero < 0 || row_used[static_cast<std::size_t>(nonzero)])
            return false;
        row_used[static_cast<std::size_t>(nonzero)] = true;
    }
    return true;
}

} // namespace

bool UnimodularTransform::is_signed_permutation() const {
    return matrix_is_signed_permutation(matrix_);
}

UnimodularTransform elementary_subtract(int n, int s, int t, const Int& q) {
    check_column(n, s, "subtract");
    check_column(n, t, "subtract");
    if (s == t)
        throw ValidationError("elementary subtraction requires s != t");
    IntMatrix m = IntMatrix::identity(n);
    m.at(t - 1, s - 1) = -q; // column s of the action is e_s - q e_t
    return UnimodularTransform(n, std::move(m), ElementarySubtract{s, t, q});
}

UnimodularTransform column_swap(int n, int s, int t) {
    check_column(n, s, "swap");
    check_column(n, t, "swap");
    if (s == t)
        throw ValidationError("column swap requires s != t");
    IntMatrix m = IntMatrix::identity(n);
    m.at(s - 1, s - 1) = 0;
    m.at(t - 1, t - 1) = 0;
    m.at(t - 1, s - 1) = 1;
    m.at(s - 1, t - 1) = 1;
    return UnimodularTransform(n, std::move(m), ColumnSwap{s, t});
}

UnimodularTransform sign_flip(int n, int s) {
    check_column(n, s, "sign flip");
    IntMatrix m = IntMatrix::identity(n);
    m.at(s - 1, s - 1) = -1;
    return UnimodularTransform(n, std::move(m), SignFlip{s});
}

UnimodularTransform rotation_transform(int n, int i) {
    if (i < 1 || i > n - 1)
        throw ValidationError("rotation offset must lie in [1, n-1]");
    IntMatrix m(n, n);
    for (int j = 1; j <= n; ++j) {
        if (j <= n - i)
            m.at(i + j - 1, j - 1) = 1;
        else
            m.at(j - (n - i) - 1, j - 1) = -1;
    }
    return UnimodularTransform(n, std::move(m), Rotation{i});
}

UnimodularTransform permutation_transform(int n, std::vector<int> source) {
    if (static_cast<int>(source.size()) != n)
        throw ValidationError("permutation must list all n source columns");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : source) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw ValidationError("permutation source is not a bijection on 1..n");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    IntMatrix m(n, n);
    for (int j = 1; j <= n; ++j)
        m.at(source[static_cast<std::size_t>(j) - 1] - 1, j - 1) = 1;
    return UnimodularTransform(n, std::move(m), Permutation{std::move(source)});
}

UnimodularTransform drop_to_last(int n, int s) {
    check_column(n, s, "drop");
    IntMatrix m(n, n);
    std::vector<int> source(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int src = j < s ? j : (j == n ? s : j + 1);
        source[static_cast<std::size_t>(j) - 1] = src;
        m.at(src - 1, j - 1) = 1;
    }
    return UnimodularTransform(n, std::move(m), DropToLast{s});
}

UnimodularTransform general_transform(IntMatrix matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
        throw ValidationError("transform matrix must be square and non-empty");
    Int d = determinant(matrix);
    if (d != 1 && d != -1)
        throw ValidationError("transform matrix must have determinant +1 or -1, got " +
                              to_decimal(d));
    int n = matrix.rows();
    return UnimodularTransform(n, std::move(matrix), General{});
}

UnimodularTransform transform_from_matrix_unchecked(IntMatrix matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
        throw ValidationError("transform matrix must be square and non-empty");
    int n = matrix.rows();
    return UnimodularTransform(n, std::move(matrix), General{});
}

UnimodularTransform compose(const UnimodularTransform& a, const UnimodularTransform& b) {
    if (a.n() != b.n())
        throw DimensionError("cannot compose transforms of different dimension");
    return UnimodularTransform(a.n(), multiply(a.matrix(), b.matrix()), General{});
}

UnimodularTransform invert(const UnimodularTransform& a) {
    const int n = a.n();
    if (const auto* es = std::get_if<ElementarySubtract>(&a.descriptor()))
        return elementary_subtract(n, es->s, es->t, -es->q);
    if (std::holds_alternative<ColumnSwap>(a.descriptor()) ||
        std::holds_alternative<SignFlip>(a.descriptor()))
        return UnimodularTransform(n, a.matrix(), a.descriptor());
    if (const auto* perm = std::get_if<Permutation>(&a.descriptor())) {
        std::vector<int> inverse(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            inverse[static_cast<std::size_t>(perm->source[static_cast<std::size_t>(j) - 1]) - 1] = j;
        return permutation_transform(n, std::move(inverse));
    }
    if (const auto* drop = std::get_if<DropToLast>(&a.descriptor())) {
        // Inverse cycle: the last column returns to slot s.
        std::vector<int> inverse(static_cast<std::size_t>(n));
        for (int m = 1; m <= n; ++m)
            inverse[static_cast<std::size_t>(m) - 1] = m < drop->s ? m : (m == drop->s ? n : m - 1);
        return permutation_transform(n, std::move(inverse));
    }
    // A signed permutation matrix inverts by transposition.
    if (matrix_is_signed_permutation(a.matrix()))
        return UnimodularTransform(n, transpose(a.matrix()), General{});

    // General case: inverse = det * adjugate (det is +-1).
    Int d = determinant(a.matrix());
    if (d != 1 && d != -1)
        throw InternalError("invert called on a non-unimodular matrix");
    IntMatrix inv(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            int mr = 0;
            for (int i = 0; i < n; ++i) {
                if (i == r)
                    continue;
                int mc = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == c)
                        continue;
                    minor.at(mr, mc) = a.matrix().at(i, j);
                    ++mc;
                }
                ++mr;
            }
            Int cof = determinant(minor);
            if ((r + c) % 2 != 0)
                cof = -cof;
            inv.at(c, r) = d == 1 ? cof : Int(-cof);
        }
    }
    return UnimodularTransform(n, std::move(inv), General{});
}

LatticeMatrix apply_matrix(const UnimodularTransform& u, const LatticeMatrix& m) {
    if (m.cols() != u.n())
        throw DimensionError("transform dimension does not match matrix columns");
    return multiply(m, u.matrix());
}

namespace {

PluckerVector push_signed_perm(const PluckerVector& p, const SignedPerm& sp) {
    const int k = p.k();
    const int n = p.n();
    std::vector<Int> out(p.size());
    std::vector<int> subset = first_subset(k);
    std::vector<int> mapped(static_cast<std::size_t>(k));
    std::size_t rank = 0;
    do {
        int eps = 1;
        for (int a = 0; a < k; ++a) {
            int j = subset[static_cast<std::size_t>(a)];
            mapped[static_cast<std::size_t>(a)] = sp.source[static_cast<std::size_t>(j)];
            eps *= sp.sign[static_cast<std::size_t>(j)];
        }
        Int value = p.signed_entry(mapped);
        out[rank] = eps > 0 ? value : Int(-value);
        ++rank;
    } while (next_subset(subset, n));
    return PluckerVector(k, n, std::move(out));
}

PluckerVector push_compound(const PluckerVector& p, const IntMatrix& a) {
    const int k = p.k();
    const int n = p.n();
    std::vector<Int> out(p.size(), Int(0));
    IntMatrix sub(k, k);

    std::vector<std::vector<int>> all;
    {
        std::vector<int> s = first_subset(k);
        do {
            all.push_back(s);
        } while (next_subset(s, n));
    }
    for (std::size_t jr = 0; jr < all.size(); ++jr) {
        const auto& J = all[jr];
        Int sum(0);
        for (std::size_t ir = 0; ir < all.size(); ++ir) {
            const Int& pi = p.at_rank(ir);
            if (pi == 0)
                continue;
            const auto& I = all[ir];
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    sub.at(r, c) = a.at(I[static_cast<std::size_t>(r)] - 1,
                                        J[static_cast<std::size_t>(c)] - 1);
            Int d = determinant(sub);
            if (d != 0)
                sum += d * pi;
        }
        out[jr] = std::move(sum);
    }
    return PluckerVector(k, n, std::move(out));
}

} // namespace

PluckerVector push_plucker(const PluckerVector& p, const UnimodularTransform& u) {
    if (u.n() != p.n())
        throw DimensionError("transform dimension does not match Pluecker vector");
    const int k = p.k();
    const int n = p.n();

    if (const auto* es = std::get_if<ElementarySubtract>(&u.descriptor())) {
        if (es->q == 0)
            return p;
        std::vector<Int> out(p.entries());
        std::vector<int> subset = first_subset(k);
        std::vector<int> replaced(static_cast<std::size_t>(k));
        std::size_t rank = 0;
        do {
            bool has_s = false, has_t = false;
            for (int v : subset) {
                has_s |= v == es->s;
                has_t |= v == es->t;
            }
            if (has_s && !has_t) {
                for (int a = 0; a < k; ++a) {
                    int v = subset[static_cast<std::size_t>(a)];
                    replaced[static_cast<std::size_t>(a)] = v == es->s ? es->t : v;
                }
                out[rank] -= es->q * p.signed_entry(replaced);
            }
            ++rank;
        } while (next_subset(subset, n));
        return PluckerVector(k, n, std::move(out));
    }
    if (std::holds_alternative<General>(u.descriptor())) {
        if (u.is_signed_permutation())
            return push_signed_perm(p, signed_perm_of(u));
        return push_compound(p, u.matrix());
    }
    // Every remaining structured descriptor is a signed permutation.
    return push_signed_perm(p, signed_perm_of(u));
}

std::string to_string(StageLabel label) {
    switch (label) {
    case StageLabel::Positivize: return "positivize";
    case StageLabel::MaxSelectRotate: return "max_select_rotate";
    case StageLabel::MaxSubtract: return "max_subtract";
    case StageLabel::MinSubtract: return "min_subtract";
    case StageLabel::DimReductionEuclid: return "dim_reduction_euclid";
    case StageLabel::DimReductionJP: return "dim_reduction_jp";
    case StageLabel::CoordinateDrop: return "coordinate_drop";
    case StageLabel::Swap: return "swap";
    }
    throw InternalError("unknown stage label");
}

StageLabel stage_label_from_string(const std::string& text) {
    if (text == "positivize") return StageLabel::Positivize;
    if (text == "max_select_rotate") return StageLabel::MaxSelectRotate;
    if (text == "max_subtract") return StageLabel::MaxSubtract;
    if (text == "min_subtract") return StageLabel::MinSubtract;
    if (text == "dim_reduction_euclid") return StageLabel::DimReductionEuclid;
    if (text == "dim_reduction_jp") return StageLabel::DimReductionJP;
    if (text == "coordinate_drop") return StageLabel::CoordinateDrop;
    if (text == "swap") return StageLabel::Swap;
    throw ValidationError("unknown stage label '" + text + "'");
}

void validate_trace_shape(const Trace& trace) {
    if (trace.k < 1 || trace.n_initial < trace.k)
        throw ValidationError("trace requires 1 <= k <= n");
    int dim = trace.n_initial;
    int drops = 0;
    for (const TraceStep& step : trace.steps) {
        if (step.ambient_n != dim)
            throw ValidationError("trace step recorded at dimension " +
                                  std::to_string(step.ambient_n) + ", expected " +
                                  std::to_string(dim));
        if (step.transform.n() != step.ambient_n)
            throw ValidationError("trace step matrix does not match its ambient dimension");
        if (step.label == StageLabel::CoordinateDrop) {
            --dim;
            ++drops;
            if (dim < trace.k)
                throw ValidationError("trace drops below dimension k");
        }
    }
    if (trace.complete()) {
        if (dim != trace.k)
            throw ValidationError("completed trace must end at dimension k");
        if (drops != trace.n_initial - trace.k)
            throw ValidationError("completed trace must contain exactly n-k coordinate drops");
    }
}

PluckerVector restrict_drop_last(const PluckerVector& p) {
    const int k = p.k();
    const int n = p.n();
    if (n - 1 < k)
        throw DimensionError("cannot drop a coordinate below dimension k");
    std::vector<Int> out;
    out.reserve(binomial(n - 1, k));
    std::vector<int> subset = first_subset(k);
    std::size_t rank = 0;
    do {
        if (subset.back() <= n - 1) {
            out.push_back(p.at_rank(rank));
        } else if (p.at_rank(rank) != 0) {
            throw ValidationError("cannot drop the last coordinate: entry " +
                                  to_decimal(p.at_rank(rank)) + " containing it is non-zero");
        }
        ++rank;
    } while (next_subset(subset, n));
    return PluckerVector(k, n - 1, std::move(out));
}

PluckerVector extend_with_zero_column(const PluckerVector& p) {
    const int k = p.k();
    const int n = p.n() + 1;
    std::vector<Int> out;
    out.reserve(binomial(n, k));
    std::vector<int> subset = first_subset(k);
    std::size_t old_rank = 0;
    do {
        if (subset.back() <= n - 1)
            out.push_back(p.at_rank(old_rank++));
        else
            out.push_back(Int(0));
    } while (next_subset(subset, n));
    return PluckerVector(k, n, std::move(out));
}

} // namespace grasscf
