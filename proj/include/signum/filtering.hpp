#ifndef SIGNUM_FILTERING_HPP
#define SIGNUM_FILTERING_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "signum/sparse_matrix.hpp"
#include "signum/types.hpp"

namespace signum {

/// Two-phase dropping policy. Early in an iteration (large residual) every
/// filter event gets the fixed budget fixed_coeff * eps_tol; once the
/// residual falls strictly below switch_residual the budget adapts to the
/// current iterate so that dropping provably cannot disturb the residual
/// recurrence.
struct FilterSchedule {
  double eps_tol = 1e-12;          // solver convergence target
  double fixed_coeff = 1e-4;       // fixed-phase budget coefficient
  double switch_residual = 1e-6;   // adaptive phase entered strictly below this
  NormKind norm_kind = NormKind::frobenius;

  /// Requires 0 < fixed_coeff*eps_tol < switch_residual < 1.
  void validate() const;
};

enum class FilterPhase { fixed, adaptive };

/// Audit record for one filter event. dropped_norm <= budget is a hard
/// guarantee checked by the drivers and the acceptance suite.
struct FilterReport {
  double budget = 0.0;
  double scalar_threshold = 0.0;
  index_t dropped_count = 0;
  double dropped_norm = 0.0;
  FilterPhase phase = FilterPhase::fixed;
};

/// Adaptive budget for the filtered Newton iteration:
///   ||R||^2 / (||X|| + ||X^{-1}||),
/// evaluated with the current iterate and its inverse. All inputs must be
/// positive.
double budget_nmf(double r_norm, double x_norm, double xinv_norm);

/// Adaptive budget for the filtered Newton-Schulz iteration:
///   (3/4) ||R_prev||^2 / (3 ||X_prev|| + ||X_prev||^3),
/// with the previous step's residual norm and pre-filter iterate norm.
double budget_nsf(double r_prev_norm, double x_prev_norm);

/// Norm state a driver carries into a filter event.
struct IterateNorms {
  double residual = 0.0;      // latest residual norm (switch test + budgets)
  double x_norm = 0.0;        // ||X_k|| (filtered iterate)
  double xinv_norm = 0.0;     // ||X_k^{-1}||, Newton family only
  double x_bar_prev_norm = 0.0;  // pre-filter iterate norm, Schulz family only
};

double budget_for_step(const FilterSchedule& schedule, Method method,
                       const IterateNorms& norms);

/// Histogram of entry magnitudes over power-of-two bins, accumulated
/// streamingly so thresholds can be selected without materializing the
/// matrix being filtered. Tracks per-bin norm mass and the largest
/// magnitude seen in the bin.
class MagnitudeHistogram {
 public:
  MagnitudeHistogram();

  void add(double magnitude);

  /// Largest threshold such that dropping every recorded magnitude <= it
  /// keeps the dropped norm (conservatively accumulated per bin) within
  /// budget. Returns 0 when even the smallest bin exceeds the budget.
  double select_threshold(double budget, NormKind kind) const;

 private:
  // frexp exponents of doubles span [-1074, 1024].
  static constexpr int kMinExp = -1100;
  static constexpr int kNumBins = 2176;
  struct Bin {
    double mass_sq = 0.0;   // sum of squares
    double mass_abs = 0.0;  // sum of absolute values
    double max_mag = 0.0;
  };
  std::array<Bin, kNumBins> bins_;
};

/// Scalar dropping threshold for one filter event: the largest epsilon,
/// resolved on a 64-bucket logarithmic magnitude histogram spanning
/// [1e-30 * max|a|, max|a|], such that the entries of magnitude <= epsilon
/// have norm at most `budget`. Main-diagonal entries are never dropped and
/// do not consume budget. Conservative: the subsequent apply_filter is
/// always within budget.
double select_threshold(const SparseMatrix& a, double budget, NormKind kind);

/// Removes every off-diagonal entry with |value| <= threshold. The report
/// carries the exact count and norm of what was removed; filtered + dropped
/// reconstructs the input entrywise. budget/phase fields are left for the
/// caller to fill.
std::pair<SparseMatrix, FilterReport> apply_filter(const SparseMatrix& a, double threshold,
                                                   NormKind kind = NormKind::frobenius);

}  // namespace signum

#endif  // SIGNUM_FILTERING_HPP
