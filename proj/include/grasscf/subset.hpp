#pragma once

#include <cstddef>
#include <vector>

namespace grasscf {

// C(n, k) as size_t; throws ValidationError if the value does not fit.
// Memoized internally.
std::size_t binomial(int n, int k);

// A strictly increasing k-tuple of column indices in [1, n], together with
// its position in the lexicographic order of all k-subsets of {1..n}.
class SubsetIndex {
public:
    SubsetIndex(std::vector<int> indices, int n);

    int k() const { return static_cast<int>(indices_.size()); }
    int n() const { return n_; }
    const std::vector<int>& indices() const { return indices_; }
    int at(int slot) const { return indices_[static_cast<std::size_t>(slot)]; }
    bool contains(int value) const;

    // 0-based lexicographic rank among all k-subsets of {1..n}.
    std::size_t rank() const;
    static SubsetIndex unrank(std::size_t rank, int k, int n);

    friend bool operator==(const SubsetIndex& a, const SubsetIndex& b) = default;

private:
    std::vector<int> indices_;
    int n_ = 0;
};

// Advances a strictly increasing tuple to its lexicographic successor;
// returns false (tuple unspecified) after the last one.
bool next_subset(std::vector<int>& subset, int n);

// First k-subset (1, 2, ..., k).
std::vector<int> first_subset(int k);

} // namespace grasscf
