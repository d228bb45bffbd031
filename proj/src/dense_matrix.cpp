#include "signum/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

extern "C" {
void dgemm_(const char* transa, const char* transb, const int* m, const int* n, const int* k,
            const double* alpha, const double* a, const int* lda, const double* b,
            const int* ldb, const double* beta, double* c, const int* ldc);
void dgetrf_(const int* m, const int* n, double* a, const int* lda, int* ipiv, int* info);
void dgetri_(const int* n, double* a, const int* lda, const int* ipiv, double* work,
             const int* lwork, int* info);
void dsyev_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda,
            double* w, double* work, const int* lwork, int* info);
}

namespace signum {

DenseMatrix DenseMatrix::identity(index_t n) {
  DenseMatrix d(n, n);
  for (index_t i = 0; i < n; ++i) d(i, i) = 1.0;
  return d;
}

DenseMatrix dense_add(const DenseMatrix& a, const DenseMatrix& b, double alpha, double beta) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) throw ShapeError("dense_add shape");
  DenseMatrix c(a.nrows(), a.ncols());
  for (size_t i = 0; i < c.data().size(); ++i) {
    c.data()[i] = alpha * a.data()[i] + beta * b.data()[i];
  }
  return c;
}

DenseMatrix dense_matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.ncols() != b.nrows()) throw ShapeError("dense_matmul inner dimensions");
  DenseMatrix c(a.nrows(), b.ncols());
  if (a.nrows() == 0 || b.ncols() == 0 || a.ncols() == 0) return c;
  // Row-major C = A*B computed as column-major C^T = B^T * A^T.
  const int m = static_cast<int>(b.ncols());
  const int n = static_cast<int>(a.nrows());
  const int k = static_cast<int>(a.ncols());
  const double one = 1.0, zero = 0.0;
  dgemm_("N", "N", &m, &n, &k, &one, b.data().data(), &m, a.data().data(), &k, &zero,
         c.data().data(), &m);
  return c;
}

DenseMatrix dense_invert(const DenseMatrix& a) {
  if (a.nrows() != a.ncols()) throw ShapeError("dense_invert requires a square matrix");
  const int n = static_cast<int>(a.nrows());
  DenseMatrix inv = a;  // row-major buffer doubles as the transpose in column-major
  if (n == 0) return inv;
  std::vector<int> ipiv(static_cast<size_t>(n));
  int info = 0;
  dgetrf_(&n, &n, inv.data().data(), &n, ipiv.data(), &info);
  if (info > 0) throw SingularMatrixError("exact zero pivot in LU factorization");
  if (info < 0) throw std::runtime_error("dgetrf argument error");
  for (index_t i = 0; i < n; ++i) {
    if (std::abs(inv(i, i)) < kSingularityFloor) {
      throw SingularMatrixError("pivot below singularity floor");
    }
  }
  int lwork = n * 64;
  std::vector<double> work(static_cast<size_t>(lwork));
  dgetri_(&n, inv.data().data(), &n, ipiv.data(), work.data(), &lwork, &info);
  if (info != 0) throw SingularMatrixError("singular matrix in inverse solve");
  // (A^T)^{-1} in column-major is exactly A^{-1} in row-major.
  return inv;
}

void dense_symmetric_eigen(const DenseMatrix& a, std::vector<double>& eigenvalues,
                           DenseMatrix& eigenvectors) {
  if (a.nrows() != a.ncols()) throw ShapeError("eigendecomposition requires a square matrix");
  const int n = static_cast<int>(a.nrows());
  eigenvalues.assign(static_cast<size_t>(n), 0.0);
  // dsyev overwrites the input with eigenvectors in column-major order; for
  // a symmetric input the row-major buffer is the same matrix.
  DenseMatrix v = a;
  if (n == 0) {
    eigenvectors = v;
    return;
  }
  int info = 0;
  int lwork = std::max(1, 34 * n);
  std::vector<double> work(static_cast<size_t>(lwork));
  dsyev_("V", "U", &n, v.data().data(), &n, eigenvalues.data(), work.data(), &lwork, &info);
  if (info != 0) throw std::runtime_error("dsyev failed to converge");
  // Column-major eigenvector columns land as rows of the row-major buffer;
  // transpose so that eigenvectors are again in columns.
  DenseMatrix vt(n, n);
  for (index_t i = 0; i < n; ++i) {
    for (index_t j = 0; j < n; ++j) vt(i, j) = v(j, i);
  }
  eigenvectors = std::move(vt);
}

double dense_norm(const DenseMatrix& a, NormKind kind) {
  switch (kind) {
    case NormKind::frobenius: {
      double s = 0.0;
      for (double v : a.data()) s += v * v;
      return std::sqrt(s);
    }
    case NormKind::one: {
      double m = 0.0;
      for (index_t j = 0; j < a.ncols(); ++j) {
        double s = 0.0;
        for (index_t i = 0; i < a.nrows(); ++i) s += std::abs(a(i, j));
        m = std::max(m, s);
      }
      return m;
    }
    case NormKind::inf: {
      double m = 0.0;
      for (index_t i = 0; i < a.nrows(); ++i) {
        double s = 0.0;
        for (index_t j = 0; j < a.ncols(); ++j) s += std::abs(a(i, j));
        m = std::max(m, s);
      }
      return m;
    }
  }
  return 0.0;
}

}  // namespace signum
