#pragma once

#include "grasscf/bigint.hpp"
#include "grasscf/matrix.hpp"
#include "grasscf/subset.hpp"

#include <optional>
#include <vector>

namespace grasscf {

// Exact Pluecker vector: the C(n,k) maximal minors of a k x n integer
// matrix, stored in lexicographic subset order. Represents a projective
// point, so the all-zero vector is rejected. For k = 2 the entries are the
// upper triangle of the skew matrix p_{i,j} = -p_{j,i}.
class PluckerVector {
public:
    PluckerVector(int k, int n, std::vector<Int> entries);

    int k() const { return k_; }
    int n() const { return n_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Int>& entries() const { return entries_; }

    const Int& at_rank(std::size_t r) const { return entries_[r]; }
    const Int& at(const SubsetIndex& s) const;

    // Signed skew access for k = 2: skew(i, j) = -skew(j, i), skew(i, i) = 0.
    Int skew(int i, int j) const;

    // Signed entry for an arbitrary tuple of distinct indices: the sorted
    // entry times the sign of the sorting permutation; 0 on a repeat.
    Int signed_entry(const std::vector<int>& tuple) const;

    friend bool operator==(const PluckerVector& a, const PluckerVector& b) = default;

private:
    int k_ = 0;
    int n_ = 0;
    std::vector<Int> entries_;
};

// All k x k column minors of m, in lexicographic order. Throws
// DimensionError for k > n and ValidationError when m is rank deficient
// (all minors zero).
PluckerVector compute_plucker(const LatticeMatrix& m);

// gcd of the absolute values of all entries; positive for any valid vector.
Int plucker_gcd(const PluckerVector& p);

// True iff p satisfies every one-item-exchange Grassmann-Pluecker relation,
// i.e. lies on the image of the Pluecker embedding. For k = 2 this is the
// family p_{ij}p_{kl} - p_{ik}p_{jl} + p_{il}p_{jk} = 0 over i<j<k<l.
bool check_relations(const PluckerVector& p);

bool is_primitive(const PluckerVector& p);

// --- small queries shared by the elimination loops ---

bool has_zero_entry(const PluckerVector& p);
std::optional<SubsetIndex> first_zero_index(const PluckerVector& p);
bool all_entries_positive(const PluckerVector& p);

// Maximum of |entries| and how many entries attain it.
struct MaxAbs {
    Int value;
    std::size_t count = 0;
};
MaxAbs max_abs(const PluckerVector& p);

// Minimum over the non-zero |entries|; nullopt when every entry is zero
// (unreachable for a valid vector).
std::optional<Int> min_nonzero_abs(const PluckerVector& p);

// Canonical text form `k n : e_0 e_1 ... e_{N-1}`.
std::string to_text(const PluckerVector& p);

} // namespace grasscf
