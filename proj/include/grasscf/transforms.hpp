#pragma once

#include "grasscf/bigint.hpp"
#include "grasscf/matrix.hpp"
#include "grasscf/plucker.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace grasscf {

// Structured descriptors for GL(n, Z) transforms. All column numbers are
// 1-based. A transform with matrix A acts on a lattice matrix M as M * A,
// i.e. on the coordinate columns w_1..w_n.

// w_s <- w_s - q * w_t. With q = 1 this is the elementary reduction that
// sends the basis vector e_s to e_s - e_t.
struct ElementarySubtract {
    int s = 0;
    int t = 0;
    Int q;
};

struct ColumnSwap {
    int s = 0;
    int t = 0;
};

// w_s <- -w_s.
struct SignFlip {
    int s = 0;
};

// New column order (w_{i+1}, ..., w_n, -w_1, ..., -w_i); moves the entry at
// (i, i+1) to (1, n) while preserving total positivity for k = 2.
struct Rotation {
    int i = 0;
};

// New column j is old column source[j-1]; source is a permutation of 1..n.
struct Permutation {
    std::vector<int> source;
};

// Order-preserving cycle sending column s to the last slot.
struct DropToLast {
    int s = 0;
};

struct General {};

using TransformDescriptor =
    std::variant<ElementarySubtract, ColumnSwap, SignFlip, Rotation, Permutation, DropToLast, General>;

class UnimodularTransform {
public:
    int n() const { return n_; }
    const IntMatrix& matrix() const { return matrix_; }
    const TransformDescriptor& descriptor() const { return descriptor_; }

    bool is_signed_permutation() const;

private:
    UnimodularTransform(int n, IntMatrix matrix, TransformDescriptor descriptor)
        : n_(n), matrix_(std::move(matrix)), descriptor_(std::move(descriptor)) {}

    int n_ = 0;
    IntMatrix matrix_;
    TransformDescriptor descriptor_;

    friend UnimodularTransform elementary_subtract(int n, int s, int t, const Int& q);
    friend UnimodularTransform column_swap(int n, int s, int t);
    friend UnimodularTransform sign_flip(int n, int s);
    friend UnimodularTransform rotation_transform(int n, int i);
    friend UnimodularTransform permutation_transform(int n, std::vector<int> source);
    friend UnimodularTransform drop_to_last(int n, int s);
    friend UnimodularTransform general_transform(IntMatrix matrix);
    friend UnimodularTransform transform_from_matrix_unchecked(IntMatrix matrix);
    friend UnimodularTransform compose(const UnimodularTransform& a, const UnimodularTransform& b);
    friend UnimodularTransform invert(const UnimodularTransform& a);
};

UnimodularTransform elementary_subtract(int n, int s, int t, const Int& q);
UnimodularTransform column_swap(int n, int s, int t);
UnimodularTransform sign_flip(int n, int s);
UnimodularTransform rotation_transform(int n, int i);
UnimodularTransform permutation_transform(int n, std::vector<int> source);
UnimodularTransform drop_to_last(int n, int s);

// Validates |det| = 1; the structured factories above are correct by
// construction and skip the determinant sweep.
UnimodularTransform general_transform(IntMatrix matrix);

// No determinant validation: for deserialized traces, where unimodularity
// is re-checked as an explicit verification step instead of at parse time.
UnimodularTransform transform_from_matrix_unchecked(IntMatrix matrix);

// compose(a, b) applies a first, then b: matrix product a.matrix * b.matrix.
UnimodularTransform compose(const UnimodularTransform& a, const UnimodularTransform& b);

// Exact integral inverse. Structured descriptors invert structurally;
// signed permutations invert by transposition; the general case goes
// through the adjugate.
UnimodularTransform invert(const UnimodularTransform& a);

// M * A with dimension checks.
LatticeMatrix apply_matrix(const UnimodularTransform& u, const LatticeMatrix& m);

// Pushforward on Pluecker vectors: the vector of any M * A where M realizes
// p. Structured descriptors take fast paths; the general case is the k-th
// compound action p'_J = sum_I det(A[I, J]) p_I.
PluckerVector push_plucker(const PluckerVector& p, const UnimodularTransform& u);

// --- continued-fraction trace ---

enum class StageLabel {
    Positivize,
    MaxSelectRotate,
    MaxSubtract,
    MinSubtract,
    DimReductionEuclid,
    DimReductionJP,
    CoordinateDrop,
    Swap,
};

std::string to_string(StageLabel label);
StageLabel stage_label_from_string(const std::string& text);

struct TraceStep {
    UnimodularTransform transform;
    StageLabel label;
    int ambient_n = 0; // dimension at which the step was recorded
};

// Ordered sequence of labeled transforms produced by a run; the
// generalized continued fraction. A completed trace carries the terminal
// coordinate p_hat and contains exactly n_initial - k CoordinateDrop steps.
struct Trace {
    int k = 0;
    int n_initial = 0;
    std::vector<TraceStep> steps;
    std::optional<Int> terminal_p_hat;

    bool complete() const { return terminal_p_hat.has_value(); }
};

// Shape checks: square matrices matching ambient_n, weakly decreasing
// ambient dimensions, each CoordinateDrop shrinking by exactly one, and the
// drop count agreeing with n_initial - k on completed traces.
void validate_trace_shape(const Trace& trace);

// Drops the last coordinate: keeps the entries indexed inside {1..n-1}.
// Requires every entry containing n to be zero.
PluckerVector restrict_drop_last(const PluckerVector& p);

// Embeds p into dimension n+1 with zero entries on every index containing
// the new last coordinate (inverse of restrict_drop_last).
PluckerVector extend_with_zero_column(const PluckerVector& p);

} // namespace grasscf
