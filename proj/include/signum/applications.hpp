#ifndef SIGNUM_APPLICATIONS_HPP
#define SIGNUM_APPLICATIONS_HPP

#include "signum/sign_iteration.hpp"
#include "signum/sparse_matrix.hpp"
#include "signum/types.hpp"

namespace signum {

/// Thrown when the extracted square-root pair fails its internal
/// consistency check.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when the sign matrix of a Riccati block embedding has a singular
/// (1,2) block, i.e. no stabilizing solution can be extracted.
class SingularW12Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SqrtResult {
  SparseMatrix sqrt;      // B^{1/2}
  SparseMatrix inv_sqrt;  // B^{-1/2}
  SignResult sign;        // the underlying 2n-by-2n solve
};

/// Principal square root and inverse square root of b, both read off the
/// sign of the block embedding [[0, b], [I, 0]]. b must have no eigenvalues
/// on the closed negative real axis; violations surface as solver failures.
SqrtResult sqrt_via_sign(const SparseMatrix& b, const IterationConfig& cfg);

/// Continuous-time algebraic Riccati problem
///   U C + C^T U + Q - U B D^{-1} B^T U = 0
/// with all blocks square of the same dimension, D symmetric positive
/// definite and Q symmetric positive semidefinite.
struct AreProblem {
  SparseMatrix b;
  SparseMatrix c;
  SparseMatrix d;
  SparseMatrix q;

  void validate() const;
  index_t dim() const { return b.nrows(); }
};

struct AreSolution {
  SparseMatrix u;
  double equation_error = 0.0;  // ||P(U)||_inf recomputed from the inputs
  IterationTrace sign_trace;
  SignStatus sign_status = SignStatus::max_iter_exceeded;
};

/// Solves the Riccati problem through the sign of the 2n-by-2n embedding
/// [[C, B D^{-1} B^T], [Q, -C^T]]; U is extracted by a linear solve against
/// the (1,2) block of the sign matrix.
AreSolution are_solve(const AreProblem& p, const IterationConfig& cfg);

/// Riccati equation error ||U C + C^T U + Q - U B D^{-1} B^T U||_inf,
/// evaluated fresh from the problem blocks.
double are_residual(const AreProblem& p, const SparseMatrix& u);

}  // namespace signum

#endif  // SIGNUM_APPLICATIONS_HPP
