#ifndef SIGNUM_SPARSE_MATRIX_HPP
#define SIGNUM_SPARSE_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "signum/types.hpp"

namespace signum {

class DenseMatrix;

struct Triplet {
  index_t row;
  index_t col;
  double value;
};

/// Compressed sparse-row matrix of doubles.
///
/// Invariants maintained by every constructor and operation:
///   - column indices strictly increasing within each row, no duplicates;
///   - no stored values equal to exactly 0.0;
///   - row_starts is nondecreasing with row_starts[nrows] == nnz.
///
/// Values are immutable after construction; operations return new matrices,
/// so concurrent reads are safe.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  /// Empty matrix of the given shape (no stored entries).
  SparseMatrix(index_t nrows, index_t ncols);

  /// Adopts prebuilt CSR arrays. The caller must supply valid CSR with
  /// sorted, duplicate-free columns; zeros are pruned here.
  SparseMatrix(index_t nrows, index_t ncols, std::vector<index_t> row_starts,
               std::vector<index_t> col_indices, std::vector<double> values);

  static SparseMatrix identity(index_t n);

  /// Builds from an unordered triplet list; duplicate positions are summed
  /// and entries that come out exactly zero are pruned.
  static SparseMatrix from_triplets(index_t nrows, index_t ncols,
                                    std::vector<Triplet> entries);

  index_t nrows() const { return nrows_; }
  index_t ncols() const { return ncols_; }
  index_t nnz() const { return static_cast<index_t>(values_.size()); }
  double density() const;

  const std::vector<index_t>& row_starts() const { return row_starts_; }
  const std::vector<index_t>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }

  std::span<const index_t> row_cols(index_t i) const;
  std::span<const double> row_vals(index_t i) const;

  /// Value at (i, j), zero if not stored. Binary search; intended for
  /// tests and small extractions, not inner loops.
  double coeff(index_t i, index_t j) const;

  bool is_square() const { return nrows_ == ncols_; }

  /// Structural self-check (sorted columns, no zeros, offsets consistent).
  void check_invariants() const;

 private:
  index_t nrows_ = 0;
  index_t ncols_ = 0;
  std::vector<index_t> row_starts_{0};
  std::vector<index_t> col_indices_;
  std::vector<double> values_;
};

/// alpha*a + beta*b with exactly-cancelled entries pruned.
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, double alpha = 1.0,
                 double beta = 1.0);

/// Sparse product a*b. Rows are assembled with a sparse accumulator; for
/// near-dense operands a BLAS-backed dense kernel is used instead. Both
/// paths are deterministic for fixed inputs.
SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);

SparseMatrix transpose(const SparseMatrix& a);

SparseMatrix scaled(const SparseMatrix& a, double alpha);

double norm(const SparseMatrix& a, NormKind kind);

DenseMatrix to_dense(const SparseMatrix& a);

/// Entries with |value| <= drop_tol are discarded; drop_tol 0 keeps
/// everything nonzero, so to_dense/from_dense round-trips losslessly.
SparseMatrix from_dense(const DenseMatrix& d, double drop_tol = 0.0);

/// Spectral radius estimate by normalized power iteration from a seeded
/// random vector. Deterministic for a fixed seed; returns 0 for the zero
/// matrix.
double power_iteration_radius(const SparseMatrix& a, index_t iters, std::uint64_t seed);

/// 2x2 block assembly; null blocks are zero. Every block must be n-by-n.
SparseMatrix assemble_blocks_2x2(index_t n, const SparseMatrix* b11,
                                 const SparseMatrix* b12, const SparseMatrix* b21,
                                 const SparseMatrix* b22);

/// Extracts rows [r0, r1) and columns [c0, c1).
SparseMatrix extract_block(const SparseMatrix& a, index_t r0, index_t r1, index_t c0,
                           index_t c1);

}  // namespace signum

#endif  // SIGNUM_SPARSE_MATRIX_HPP
