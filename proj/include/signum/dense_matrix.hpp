#ifndef SIGNUM_DENSE_MATRIX_HPP
#define SIGNUM_DENSE_MATRIX_HPP

#include <vector>

#include "signum/types.hpp"

namespace signum {

/// Row-major dense matrix, used for small-scale oracle computations and as
/// the backing store of the dense fast paths.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(index_t nrows, index_t ncols)
      : nrows_(nrows), ncols_(ncols), values_(static_cast<size_t>(nrows * ncols), 0.0) {}

  static DenseMatrix identity(index_t n);

  index_t nrows() const { return nrows_; }
  index_t ncols() const { return ncols_; }

  double& operator()(index_t i, index_t j) { return values_[static_cast<size_t>(i * ncols_ + j)]; }
  double operator()(index_t i, index_t j) const {
    return values_[static_cast<size_t>(i * ncols_ + j)];
  }

  std::vector<double>& data() { return values_; }
  const std::vector<double>& data() const { return values_; }

 private:
  index_t nrows_ = 0;
  index_t ncols_ = 0;
  std::vector<double> values_;
};

DenseMatrix dense_add(const DenseMatrix& a, const DenseMatrix& b, double alpha = 1.0,
                      double beta = 1.0);

/// BLAS dgemm product.
DenseMatrix dense_matmul(const DenseMatrix& a, const DenseMatrix& b);

/// LAPACK LU inverse with partial pivoting. Throws SingularMatrixError when
/// a pivot magnitude falls below the singularity floor.
DenseMatrix dense_invert(const DenseMatrix& a);

/// Symmetric eigendecomposition (LAPACK dsyev): a = V diag(w) V^T with the
/// eigenvectors in the columns of V.
void dense_symmetric_eigen(const DenseMatrix& a, std::vector<double>& eigenvalues,
                           DenseMatrix& eigenvectors);

double dense_norm(const DenseMatrix& a, NormKind kind);

}  // namespace signum

#endif  // SIGNUM_DENSE_MATRIX_HPP
