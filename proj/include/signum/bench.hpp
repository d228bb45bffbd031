#ifndef SIGNUM_BENCH_HPP
#define SIGNUM_BENCH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "signum/sign_iteration.hpp"
#include "signum/sparse_matrix.hpp"

namespace signum {

struct BenchRow {
  std::string method;
  index_t n = 0;
  double et_seconds = 0.0;
  std::optional<double> ae;  // filtered vs unfiltered twin, nmf/nsf only
  double final_residual = 0.0;
  std::optional<double> ee;  // Riccati equation error, ARE rows only
};

/// Rows plus everything the acceptance suite audits afterwards: the full
/// iteration traces (filter events) and, where cheap enough to keep, the
/// final matrices keyed "method@n".
struct BenchRun {
  std::vector<BenchRow> rows;
  std::vector<IterationTrace> traces;
  std::vector<std::pair<std::string, SparseMatrix>> solutions;
  std::string header_comment;
};

/// Square-root embedding benchmark: the tridiagonal dispersion matrix of
/// size n embedded as [[0, B], [I, 0]], all four methods, eps_tol 1e-12.
/// Runs n in {500, 1000, 3000} up to nmax.
BenchRun bench_table421(index_t nmax);

/// Riccati benchmark over the banded family, all four methods, eps_tol
/// 1e-14. Runs n in {500, 600, 700} intersected with [5, nmax]. D is seeded
/// per row; the seed is recorded in the CSV header comment.
BenchRun bench_table431(index_t nmax);

/// Synthetic network benchmark: chain-with-chords graphs, I - alpha*H with
/// auto alpha, filtered Newton, eps_tol 1e-13. Runs n in {2000, 10000,
/// 50000} up to nmax.
BenchRun bench_network(index_t nmax);

void write_bench_csv(std::ostream& out, const BenchRun& run);

/// One row per executed step with the fixed header
/// k,residual,nnz,threshold,dropped_norm,dropped_count,step_seconds.
void write_trace_csv(std::ostream& out, const IterationTrace& trace);

}  // namespace signum

#endif  // SIGNUM_BENCH_HPP
