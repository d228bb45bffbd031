#ifndef SIGNUM_SIGN_ITERATION_HPP
#define SIGNUM_SIGN_ITERATION_HPP

#include <optional>
#include <vector>

#include "signum/dense_matrix.hpp"
#include "signum/filtering.hpp"
#include "signum/sparse_matrix.hpp"
#include "signum/types.hpp"

namespace signum {

struct IterationConfig {
  Method method = Method::nm;
  double eps_tol = 1e-12;
  index_t max_iter = 100;
  FilterSchedule schedule{};  // schedule.eps_tol == 0 inherits eps_tol
  NormKind norm_kind = NormKind::frobenius;
};

/// One executed iteration step.
struct StepRecord {
  index_t k = 0;               // 1-based step counter
  double residual_norm = 0.0;  // after the step
  index_t nnz = 0;             // of the (possibly filtered) iterate
  std::optional<FilterReport> filter;
  double seconds = 0.0;
};

struct IterationTrace {
  double initial_residual = 0.0;
  std::vector<StepRecord> steps;
  double total_seconds = 0.0;
};

enum class SignStatus { converged, max_iter_exceeded, diverged, singular_iterate };

const char* to_string(SignStatus status);

struct SignResult {
  SparseMatrix sign;
  IterationTrace trace;
  SignStatus status = SignStatus::max_iter_exceeded;
  bool converged = false;
  index_t iterations = 0;
  /// Set for the Schulz family when the iteration starts outside its local
  /// convergence region (initial residual norm >= 1). Informational only.
  bool ns_precondition_warning = false;
};

/// One Newton step (x + x^{-1}) / 2. Throws SingularMatrixError when the
/// iterate is not invertible, which signals spectrum on or near the
/// imaginary axis.
SparseMatrix newton_step(const SparseMatrix& x);

/// One Newton-Schulz step x (3I - x^2) / 2. Inverse free.
SparseMatrix newton_schulz_step(const SparseMatrix& x);

/// ||I - x^2|| in the requested norm.
double residual(const SparseMatrix& x, NormKind kind);

/// Runs the configured sign iteration until the residual falls to eps_tol
/// or a safeguard trips. For the filtered methods each step computes the
/// raw iterate, derives the budget from the schedule, selects a threshold,
/// applies the filter and records the event in the trace.
SignResult run(const SparseMatrix& a, const IterationConfig& cfg);

/// Reference sign matrix for testing at small n: symmetric inputs go
/// through an eigendecomposition, everything else through a dense unfiltered
/// Newton iteration. Throws std::runtime_error when no reliable sign can be
/// produced.
DenseMatrix dense_sign_oracle(const DenseMatrix& a);

}  // namespace signum

#endif  // SIGNUM_SIGN_ITERATION_HPP
