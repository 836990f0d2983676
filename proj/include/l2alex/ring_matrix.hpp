#pragma once

// Matrices over the group ring, plus the multiplication kernels.
//
// Two product routes exist:
//   * free products (mul_free) for the symbolic fox-calculus checks, exact
//     free-group arithmetic with no oracle;
//   * quotient products (mul) used by the determinant engine, where every
//     product word is rewritten to its oracle normal form so that supports
//     merge.  The quotient map is a ring homomorphism, so traces computed
//     either way agree; only the merged route is computationally viable.
//
// The quotient kernel is deterministic by construction: the pair stream of
// every output entry is cut into fixed-size chunks independent of the thread
// count, each chunk is accumulated locally, and chunk results are combined
// by a fixed-shape pairwise merge.  Serial and OpenMP execution therefore
// produce bit-identical results.

#include <vector>

#include "l2alex/group_ring.hpp"
#include "l2alex/oracle.hpp"

namespace l2alex {

class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RingMatrix identity(int n);
    /// n x n diagonal matrix with every diagonal entry equal to d.
    static RingMatrix scalar(int n, const GroupRingElement& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    GroupRingElement& at(int i, int j) { return e_[i * cols_ + j]; }
    const GroupRingElement& at(int i, int j) const { return e_[i * cols_ + j]; }

    /// Conjugate transpose: entry (i,j) becomes adjoint of entry (j,i).
    RingMatrix adjoint_transpose() const;
    RingMatrix transpose() const;

    bool is_identity() const;
    /// Sum of l1 norms of all entries (diagnostics).
    double l1_mass() const;
    /// Largest entry support (diagnostics).
    std::size_t max_support() const;

    RingMatrix& operator+=(const RingMatrix& rhs);
    RingMatrix& operator-=(const RingMatrix& rhs);
    RingMatrix& operator*=(double s);
    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { a += b; return a; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { a -= b; return a; }
    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

    /// Adds c * identity-word to every diagonal entry.
    void add_scalar_diagonal(double c);
    /// Rewrites every entry word to oracle normal form.
    void normalize(const NormalFormOracle& oracle);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GroupRingElement> e_;
};

/// Exact free-group matrix product (fox-calculus route).
RingMatrix mul_free(const RingMatrix& a, const RingMatrix& b);

struct MulContext {
    const NormalFormOracle* oracle = nullptr;
    double prune = 0.0;         // drop |coeff| < prune after each product
    bool parallel = true;
    double pruned_mass = 0.0;   // accumulated l1 mass of dropped terms
    std::size_t chunk_pairs = 16384;  // fixed chunk size; thread-count independent
};

/// Quotient-ring matrix product through the oracle; deterministic chunked
/// kernel, OpenMP-parallel when ctx.parallel is set.
RingMatrix mul(const RingMatrix& a, const RingMatrix& b, MulContext& ctx);

/// Naive serial reference (ordered std::map accumulation).  Kept for tests
/// and the benchmark; arithmetically exact on integer-valued inputs.
RingMatrix mul_reference(const RingMatrix& a, const RingMatrix& b,
                         const NormalFormOracle& oracle);

/// Block diagonal composition diag(a, b).
RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b);

} // namespace l2alex
