#include "grasscf/subset.hpp"

#include "grasscf/errors.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>

namespace grasscf {

namespace {

constexpr std::size_t kOverflow = std::numeric_limits<std::size_t>::max();

// Pascal triangle rows, grown on demand; kOverflow marks values that do
// not fit in size_t.
std::vector<std::vector<std::size_t>>& pascal_rows() {
    static std::vector<std::vector<std::size_t>> rows{{1}};
    return rows;
}

std::mutex& pascal_mutex() {
    static std::mutex m;
    return m;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
    if (a == kOverflow || b == kOverflow || a > kOverflow - b)
        return kOverflow;
    return a + b;
}

} // namespace

std::size_t binomial(int n, int k) {
    if (n < 0 || k < 0)
        throw ValidationError("binomial requires non-negative arguments");
    if (k > n)
        return 0;
    std::lock_guard<std::mutex> lock(pascal_mutex());
    auto& rows = pascal_rows();
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<std::size_t> row(prev.size() + 1, 1);
        for (std::size_t j = 1; j + 1 < row.size(); ++j)
            row[j] = saturating_add(prev[j - 1], prev[j]);
        rows.push_back(std::move(row));
    }
    std::size_t value = rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    if (value == kOverflow)
        throw ValidationError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                              ") does not fit in size_t");
    return value;
}

SubsetIndex::SubsetIndex(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
    if (indices_.empty())
        throw ValidationError("subset index must have at least one element");
    if (n_ < static_cast<int>(indices_.size()))
        throw ValidationError("subset size exceeds ambient dimension");
    int prev = 0;
    for (int v : indices_) {
        if (v <= prev || v > n_)
            throw ValidationError("subset indices must be strictly increasing within [1, n]");
        prev = v;
    }
}

bool SubsetIndex::contains(int value) const {
    return std::binary_search(indices_.begin(), indices_.end(), value);
}

std::size_t SubsetIndex::rank() const {
    const int kk = k();
    std::size_t r = 0;
    int prev = 0;
    for (int slot = 0; slot < kk; ++slot) {
        for (int c = prev + 1; c < indices_[static_cast<std::size_t>(slot)]; ++c)
            r += binomial(n_ - c, kk - 1 - slot);
        prev = indices_[static_cast<std::size_t>(slot)];
    }
    return r;
}

SubsetIndex SubsetIndex::unrank(std::size_t rank, int k, int n) {
    if (k < 1 || n < k)
        throw ValidationError("unrank requires 1 <= k <= n");
    if (rank >= binomial(n, k))
        throw ValidationError("subset rank out of range");
    std::vector<int> indices(static_cast<std::size_t>(k));
    int c = 1;
    for (int slot = 0; slot < k; ++slot) {
        for (;; ++c) {
            std::size_t block = binomial(n - c, k - 1 - slot);
            if (rank < block)
                break;
            rank -= block;
        }
        indices[static_cast<std::size_t>(slot)] = c;
        ++c;
    }
    return SubsetIndex(std::move(indices), n);
}

bool next_subset(std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    for (int slot = k - 1; slot >= 0; --slot) {
        if (subset[static_cast<std::size_t>(slot)] < n - (k - 1 - slot)) {
            ++subset[static_cast<std::size_t>(slot)];
            for (int j = slot + 1; j < k; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_subset(int k) {
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        s[static_cast<std::size_t>(i)] = i + 1;
    return s;
}

} // namespace grasscf
