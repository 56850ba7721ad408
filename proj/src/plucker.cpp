#include "grasscf/plucker.hpp"

#include "grasscf/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace grasscf {

namespace {

// Upper bound on materialized entries; keeps accidental huge (k, n) inputs
// from exhausting memory.
constexpr std::size_t kMaxEntries = std::size_t(1) << 24;

Int minor_of_columns(const LatticeMatrix& m, const std::vector<int>& cols) {
    const int k = static_cast<int>(cols.size());
    IntMatrix sub(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            sub.at(r, c) = m.at(r, cols[static_cast<std::size_t>(c)] - 1);
    return determinant(sub);
}

} // namespace

PluckerVector::PluckerVector(int k, int n, std::vector<Int> entries)
    : k_(k), n_(n), entries_(std::move(entries)) {
    if (k_ < 1 || n_ < k_)
        throw ValidationError("Pluecker vector requires 1 <= k <= n");
    std::size_t expected = binomial(n_, k_);
    if (expected > kMaxEntries)
        throw ValidationError("C(n,k) too large to materialize");
    if (entries_.size() != expected)
        throw ValidationError("Pluecker vector has " + std::to_string(entries_.size()) +
                              " entries, expected C(" + std::to_string(n_) + "," +
                              std::to_string(k_) + ") = " + std::to_string(expected));
    bool any_nonzero = false;
    for (const Int& e : entries_) {
        if (e != 0) {
            any_nonzero = true;
            break;
        }
    }
    if (!any_nonzero)
        throw ValidationError("Pluecker vector must not be identically zero");
}

const Int& PluckerVector::at(const SubsetIndex& s) const {
    if (s.k() != k_ || s.n() != n_)
        throw DimensionError("subset index does not match Pluecker vector shape");
    return entries_[s.rank()];
}

Int PluckerVector::skew(int i, int j) const {
    if (k_ != 2)
        throw DimensionError("skew access is defined for k = 2 only");
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw ValidationError("skew index out of range");
    if (i == j)
        return 0;
    if (i < j)
        return entries_[SubsetIndex({i, j}, n_).rank()];
    return -entries_[SubsetIndex({j, i}, n_).rank()];
}

Int PluckerVector::signed_entry(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != k_)
        throw DimensionError("tuple arity does not match k");
    std::vector<int> sorted = tuple;
    // Insertion sort, counting inversions to get the permutation sign.
    int inversions = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        int v = sorted[i];
        std::size_t j = i;
        while (j > 0 && sorted[j - 1] > v) {
            sorted[j] = sorted[j - 1];
            --j;
            ++inversions;
        }
        sorted[j] = v;
    }
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            return 0;
    const Int& value = entries_[SubsetIndex(sorted, n_).rank()];
    return (inversions % 2 == 0) ? value : Int(-value);
}

PluckerVector compute_plucker(const LatticeMatrix& m) {
    const int k = m.rows();
    const int n = m.cols();
    if (k < 1)
        throw ValidationError("matrix must have at least one row");
    if (k > n)
        throw DimensionError("matrix must have at least as many columns as rows");
    std::size_t count = binomial(n, k);
    if (count > kMaxEntries)
        throw ValidationError("C(n,k) too large to materialize");
    std::vector<Int> entries;
    entries.reserve(count);
    std::vector<int> cols = first_subset(k);
    bool any_nonzero = false;
    do {
        entries.push_back(minor_of_columns(m, cols));
        if (entries.back() != 0)
            any_nonzero = true;
    } while (next_subset(cols, n));
    if (!any_nonzero)
        throw ValidationError("matrix is rank deficient: every maximal minor vanishes");
    return PluckerVector(k, n, std::move(entries));
}

Int plucker_gcd(const PluckerVector& p) {
    Int g(0);
    for (const Int& e : p.entries()) {
        g = gcd_of(g, e);
        if (g == 1)
            break;
    }
    return g;
}

bool check_relations(const PluckerVector& p) {
    const int k = p.k();
    const int n = p.n();
    if (k == n || k + 1 > n)
        return true; // a single coordinate, no quadratic relations
    // One-item exchange: for every (k-1)-subset I and (k+1)-subset J,
    //   sum_t (-1)^(t-1) * p[I + J_t] * p[J - J_t] = 0,
    // where p on an unsorted tuple means the signed entry.
    std::vector<int> left;
    std::vector<int> right(static_cast<std::size_t>(k + 1));
    std::vector<int> probe(static_cast<std::size_t>(k));
    std::vector<int> reduced(static_cast<std::size_t>(k));

    auto relation_holds = [&](const std::vector<int>& I, const std::vector<int>& J) {
        Int sum(0);
        for (int t = 0; t <= k; ++t) {
            // p[I with J[t] appended], signed
            for (int a = 0; a < k - 1; ++a)
                probe[static_cast<std::size_t>(a)] = I[static_cast<std::size_t>(a)];
            probe[static_cast<std::size_t>(k - 1)] = J[static_cast<std::size_t>(t)];
            Int lhs = p.signed_entry(probe);
            if (lhs == 0)
                continue;
            // p[J minus slot t], already sorted
            int w = 0;
            for (int a = 0; a <= k; ++a)
                if (a != t)
                    reduced[static_cast<std::size_t>(w++)] = J[static_cast<std::size_t>(a)];
            const Int& rhs = p.at(SubsetIndex(reduced, n));
            if (t % 2 == 0)
                sum += lhs * rhs;
            else
                sum -= lhs * rhs;
        }
        return sum == 0;
    };

    bool have_left = true;
    if (k == 1) {
        // I is the empty tuple; the relations are trivially satisfied.
        return true;
    }
    left = first_subset(k - 1);
    while (have_left) {
        std::vector<int> J = first_subset(k + 1);
        bool have_right = true;
        while (have_right) {
            for (int a = 0; a <= k; ++a)
                right[static_cast<std::size_t>(a)] = J[static_cast<std::size_t>(a)];
            if (!relation_holds(left, right))
                return false;
            have_right = next_subset(J, n);
        }
        have_left = next_subset(left, n);
    }
    return true;
}

bool is_primitive(const PluckerVector& p) { return plucker_gcd(p) == 1; }

bool has_zero_entry(const PluckerVector& p) {
    for (const Int& e : p.entries())
        if (e == 0)
            return true;
    return false;
}

std::optional<SubsetIndex> first_zero_index(const PluckerVector& p) {
    for (std::size_t r = 0; r < p.size(); ++r)
        if (p.at_rank(r) == 0)
            return SubsetIndex::unrank(r, p.k(), p.n());
    return std::nullopt;
}

bool all_entries_positive(const PluckerVector& p) {
    for (const Int& e : p.entries())
        if (e <= 0)
            return false;
    return true;
}

MaxAbs max_abs(const PluckerVector& p) {
    MaxAbs result{Int(0), 0};
    for (const Int& e : p.entries()) {
        Int a = abs_of(e);
        if (a > result.value) {
            result.value = a;
            result.count = 1;
        } else if (a == result.value) {
            ++result.count;
        }
    }
    return result;
}

std::optional<Int> min_nonzero_abs(const PluckerVector& p) {
    std::optional<Int> best;
    for (const Int& e : p.entries()) {
        if (e == 0)
            continue;
        Int a = abs_of(e);
        if (!best || a < *best)
            best = a;
    }
    return best;
}

std::string to_text(const PluckerVector& p) {
    std::string out = std::to_string(p.k()) + " " + std::to_string(p.n()) + " :";
    for (const Int& e : p.entries()) {
        out += ' ';
        out += to_decimal(e);
    }
    return out;
}

} // namespace grasscf
