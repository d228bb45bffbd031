#ifndef SIGNUM_LU_HPP
#define SIGNUM_LU_HPP

#include <vector>

#include "signum/sparse_matrix.hpp"
#include "signum/types.hpp"

namespace signum {

/// Sparse LU factorization with partial pivoting (left-looking,
/// column-by-column with depth-first reachability on the factor pattern).
/// Factors are stored column-compressed: L unit lower triangular with the
/// unit diagonal implicit, U upper triangular including the pivots.
class SparseLu {
 public:
  /// Factors a square matrix. Throws SingularMatrixError when a pivot
  /// magnitude is below the singularity floor, ShapeError if non-square.
  explicit SparseLu(const SparseMatrix& a);

  index_t dim() const { return n_; }

  /// In-place dense solve: x := a^{-1} x.
  void solve(std::vector<double>& x) const;

  /// Solves a x = e_j exploiting sparsity of the unit right-hand side.
  /// On return `touched` holds the (unsorted) indices whose solution value
  /// is nonzero and `workspace` holds those values; workspace positions
  /// outside `touched` are zero. workspace must be sized n and zeroed
  /// before the first call; the routine restores it to zero before
  /// returning the next call's precondition.
  void solve_unit_column(index_t j, std::vector<double>& workspace,
                         std::vector<index_t>& touched) const;

  index_t factor_nnz() const;

 private:
  index_t n_ = 0;
  // Column-compressed factors.
  std::vector<index_t> l_starts_, l_rows_;
  std::vector<double> l_vals_;
  std::vector<index_t> u_starts_, u_rows_;
  std::vector<double> u_vals_;
  std::vector<index_t> row_perm_;  // row_perm_[original_row] = pivotal position
};

/// Full inverse, stored sparse with exact zeros pruned. Dispatches to a
/// LAPACK dense kernel when the operand is near dense, otherwise factors
/// sparsely and solves column by column.
SparseMatrix lu_invert(const SparseMatrix& a);

}  // namespace signum

#endif  // SIGNUM_LU_HPP
