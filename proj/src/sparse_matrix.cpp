#include "signum/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "signum/dense_matrix.hpp"
#include "signum/rng.hpp"

namespace signum {

namespace {

void require_same_shape(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
    throw ShapeError("shape mismatch: " + std::to_string(a.nrows()) + "x" +
                     std::to_string(a.ncols()) + " vs " + std::to_string(b.nrows()) + "x" +
                     std::to_string(b.ncols()));
  }
}

// Near-dense operands go through dgemm; conversions are cheap relative to
// the cubic work saved.
constexpr index_t kDenseKernelMinDim = 320;
constexpr double kDenseKernelDensity = 0.15;

bool dense_kernel_eligible(const SparseMatrix& a, const SparseMatrix& b) {
  return a.nrows() >= kDenseKernelMinDim && a.ncols() >= kDenseKernelMinDim &&
         b.ncols() >= kDenseKernelMinDim && a.density() > kDenseKernelDensity &&
         b.density() > kDenseKernelDensity;
}

}  // namespace

SparseMatrix::SparseMatrix(index_t nrows, index_t ncols)
    : nrows_(nrows), ncols_(ncols), row_starts_(static_cast<size_t>(nrows) + 1, 0) {
  if (nrows < 0 || ncols < 0) throw ShapeError("negative dimension");
}

SparseMatrix::SparseMatrix(index_t nrows, index_t ncols, std::vector<index_t> row_starts,
                           std::vector<index_t> col_indices, std::vector<double> values)
    : nrows_(nrows),
      ncols_(ncols),
      row_starts_(std::move(row_starts)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
  if (nrows < 0 || ncols < 0) throw ShapeError("negative dimension");
  if (row_starts_.size() != static_cast<size_t>(nrows_) + 1) {
    throw ShapeError("row_starts length must be nrows+1");
  }
  // Prune explicit zeros in place, keeping row offsets consistent.
  if (std::find(values_.begin(), values_.end(), 0.0) != values_.end()) {
    std::vector<index_t> new_starts(static_cast<size_t>(nrows_) + 1, 0);
    size_t out = 0;
    for (index_t i = 0; i < nrows_; ++i) {
      new_starts[static_cast<size_t>(i)] = static_cast<index_t>(out);
      for (index_t p = row_starts_[static_cast<size_t>(i)];
           p < row_starts_[static_cast<size_t>(i) + 1]; ++p) {
        if (values_[static_cast<size_t>(p)] != 0.0) {
          col_indices_[out] = col_indices_[static_cast<size_t>(p)];
          values_[out] = values_[static_cast<size_t>(p)];
          ++out;
        }
      }
    }
    new_starts[static_cast<size_t>(nrows_)] = static_cast<index_t>(out);
    col_indices_.resize(out);
    values_.resize(out);
    row_starts_ = std::move(new_starts);
  }
}

SparseMatrix SparseMatrix::identity(index_t n) {
  std::vector<index_t> starts(static_cast<size_t>(n) + 1);
  std::vector<index_t> cols(static_cast<size_t>(n));
  std::vector<double> vals(static_cast<size_t>(n), 1.0);
  for (index_t i = 0; i <= n; ++i) starts[static_cast<size_t>(i)] = i;
  for (index_t i = 0; i < n; ++i) cols[static_cast<size_t>(i)] = i;
  return SparseMatrix(n, n, std::move(starts), std::move(cols), std::move(vals));
}

SparseMatrix SparseMatrix::from_triplets(index_t nrows, index_t ncols,
                                         std::vector<Triplet> entries) {
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= nrows || t.col < 0 || t.col >= ncols) {
      throw ShapeError("triplet out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& x, const Triplet& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  std::vector<index_t> starts(static_cast<size_t>(nrows) + 1, 0);
  std::vector<index_t> cols;
  std::vector<double> vals;
  cols.reserve(entries.size());
  vals.reserve(entries.size());
  size_t i = 0;
  for (index_t r = 0; r < nrows; ++r) {
    starts[static_cast<size_t>(r)] = static_cast<index_t>(vals.size());
    while (i < entries.size() && entries[i].row == r) {
      index_t c = entries[i].col;
      double v = 0.0;
      while (i < entries.size() && entries[i].row == r && entries[i].col == c) {
        v += entries[i].value;
        ++i;
      }
      if (v != 0.0) {
        cols.push_back(c);
        vals.push_back(v);
      }
    }
  }
  starts[static_cast<size_t>(nrows)] = static_cast<index_t>(vals.size());
  return SparseMatrix(nrows, ncols, std::move(starts), std::move(cols), std::move(vals));
}

double SparseMatrix::density() const {
  if (nrows_ == 0 || ncols_ == 0) return 0.0;
  return static_cast<double>(nnz()) /
         (static_cast<double>(nrows_) * static_cast<double>(ncols_));
}

std::span<const index_t> SparseMatrix::row_cols(index_t i) const {
  const index_t b = row_starts_[static_cast<size_t>(i)];
  const index_t e = row_starts_[static_cast<size_t>(i) + 1];
  return {col_indices_.data() + b, static_cast<size_t>(e - b)};
}

std::span<const double> SparseMatrix::row_vals(index_t i) const {
  const index_t b = row_starts_[static_cast<size_t>(i)];
  const index_t e = row_starts_[static_cast<size_t>(i) + 1];
  return {values_.data() + b, static_cast<size_t>(e - b)};
}

double SparseMatrix::coeff(index_t i, index_t j) const {
  auto cols = row_cols(i);
  auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0.0;
  return row_vals(i)[static_cast<size_t>(it - cols.begin())];
}

void SparseMatrix::check_invariants() const {
  if (row_starts_.size() != static_cast<size_t>(nrows_) + 1) {
    throw std::logic_error("row_starts length");
  }
  if (row_starts_.front() != 0 || row_starts_.back() != nnz()) {
    throw std::logic_error("row_starts endpoints");
  }
  for (index_t i = 0; i < nrows_; ++i) {
    if (row_starts_[static_cast<size_t>(i)] > row_starts_[static_cast<size_t>(i) + 1]) {
      throw std::logic_error("row_starts not nondecreasing");
    }
    auto cols = row_cols(i);
    for (size_t p = 0; p < cols.size(); ++p) {
      if (cols[p] < 0 || cols[p] >= ncols_) throw std::logic_error("column out of range");
      if (p > 0 && cols[p] <= cols[p - 1]) throw std::logic_error("columns not increasing");
    }
  }
  for (double v : values_) {
    if (v == 0.0) throw std::logic_error("stored zero");
  }
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, double alpha, double beta) {
  require_same_shape(a, b);
  std::vector<index_t> starts(static_cast<size_t>(a.nrows()) + 1, 0);
  std::vector<index_t> cols;
  std::vector<double> vals;
  cols.reserve(a.values().size() + b.values().size());
  vals.reserve(a.values().size() + b.values().size());
  for (index_t i = 0; i < a.nrows(); ++i) {
    starts[static_cast<size_t>(i)] = static_cast<index_t>(vals.size());
    auto ac = a.row_cols(i);
    auto av = a.row_vals(i);
    auto bc = b.row_cols(i);
    auto bv = b.row_vals(i);
    size_t p = 0, q = 0;
    while (p < ac.size() || q < bc.size()) {
      index_t c;
      double v;
      if (q == bc.size() || (p < ac.size() && ac[p] < bc[q])) {
        c = ac[p];
        v = alpha * av[p];
        ++p;
      } else if (p == ac.size() || bc[q] < ac[p]) {
        c = bc[q];
        v = beta * bv[q];
        ++q;
      } else {
        c = ac[p];
        v = alpha * av[p] + beta * bv[q];
        ++p;
        ++q;
      }
      if (v != 0.0) {
        cols.push_back(c);
        vals.push_back(v);
      }
    }
  }
  starts[static_cast<size_t>(a.nrows())] = static_cast<index_t>(vals.size());
  return SparseMatrix(a.nrows(), a.ncols(), std::move(starts), std::move(cols),
                      std::move(vals));
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.ncols() != b.nrows()) {
    throw ShapeError("matmul inner dimensions: " + std::to_string(a.ncols()) + " vs " +
                     std::to_string(b.nrows()));
  }
  if (dense_kernel_eligible(a, b)) {
    return from_dense(dense_matmul(to_dense(a), to_dense(b)), 0.0);
  }

  const index_t m = a.nrows();
  const index_t n = b.ncols();
  std::vector<index_t> starts(static_cast<size_t>(m) + 1, 0);
  std::vector<index_t> cols;
  std::vector<double> vals;

  // Gustavson row assembly: scatter into a dense accumulator, gather the
  // touched columns in sorted order.
  std::vector<double> acc(static_cast<size_t>(n), 0.0);
  std::vector<char> occupied(static_cast<size_t>(n), 0);
  std::vector<index_t> touched;
  touched.reserve(64);

  for (index_t i = 0; i < m; ++i) {
    starts[static_cast<size_t>(i)] = static_cast<index_t>(vals.size());
    touched.clear();
    auto ac = a.row_cols(i);
    auto av = a.row_vals(i);
    for (size_t p = 0; p < ac.size(); ++p) {
      const index_t k = ac[p];
      const double aik = av[p];
      auto bc = b.row_cols(k);
      auto bv = b.row_vals(k);
      for (size_t q = 0; q < bc.size(); ++q) {
        const index_t j = bc[q];
        if (!occupied[static_cast<size_t>(j)]) {
          occupied[static_cast<size_t>(j)] = 1;
          acc[static_cast<size_t>(j)] = aik * bv[q];
          touched.push_back(j);
        } else {
          acc[static_cast<size_t>(j)] += aik * bv[q];
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (index_t j : touched) {
      const double v = acc[static_cast<size_t>(j)];
      occupied[static_cast<size_t>(j)] = 0;
      if (v != 0.0) {
        cols.push_back(j);
        vals.push_back(v);
      }
    }
  }
  starts[static_cast<size_t>(m)] = static_cast<index_t>(vals.size());
  return SparseMatrix(m, n, std::move(starts), std::move(cols), std::move(vals));
}

SparseMatrix transpose(const SparseMatrix& a) {
  const index_t m = a.nrows();
  const index_t n = a.ncols();
  std::vector<index_t> counts(static_cast<size_t>(n) + 1, 0);
  for (index_t c : a.col_indices()) ++counts[static_cast<size_t>(c) + 1];
  for (index_t j = 0; j < n; ++j) {
    counts[static_cast<size_t>(j) + 1] += counts[static_cast<size_t>(j)];
  }
  std::vector<index_t> starts = counts;
  std::vector<index_t> cols(a.values().size());
  std::vector<double> vals(a.values().size());
  for (index_t i = 0; i < m; ++i) {
    auto ac = a.row_cols(i);
    auto av = a.row_vals(i);
    for (size_t p = 0; p < ac.size(); ++p) {
      index_t& pos = counts[static_cast<size_t>(ac[p])];
      cols[static_cast<size_t>(pos)] = i;
      vals[static_cast<size_t>(pos)] = av[p];
      ++pos;
    }
  }
  return SparseMatrix(n, m, std::move(starts), std::move(cols), std::move(vals));
}

SparseMatrix scaled(const SparseMatrix& a, double alpha) {
  if (alpha == 0.0) return SparseMatrix(a.nrows(), a.ncols());
  std::vector<double> vals = a.values();
  for (double& v : vals) v *= alpha;
  return SparseMatrix(a.nrows(), a.ncols(), a.row_starts(), a.col_indices(),
                      std::move(vals));
}

double norm(const SparseMatrix& a, NormKind kind) {
  switch (kind) {
    case NormKind::frobenius: {
      double s = 0.0;
      for (double v : a.values()) s += v * v;
      return std::sqrt(s);
    }
    case NormKind::one: {
      std::vector<double> col_sums(static_cast<size_t>(a.ncols()), 0.0);
      const auto& cols = a.col_indices();
      const auto& vals = a.values();
      for (size_t p = 0; p < vals.size(); ++p) {
        col_sums[static_cast<size_t>(cols[p])] += std::abs(vals[p]);
      }
      double m = 0.0;
      for (double s : col_sums) m = std::max(m, s);
      return m;
    }
    case NormKind::inf: {
      double m = 0.0;
      for (index_t i = 0; i < a.nrows(); ++i) {
        double s = 0.0;
        for (double v : a.row_vals(i)) s += std::abs(v);
        m = std::max(m, s);
      }
      return m;
    }
  }
  return 0.0;
}

DenseMatrix to_dense(const SparseMatrix& a) {
  DenseMatrix d(a.nrows(), a.ncols());
  for (index_t i = 0; i < a.nrows(); ++i) {
    auto cols = a.row_cols(i);
    auto vals = a.row_vals(i);
    for (size_t p = 0; p < cols.size(); ++p) d(i, cols[p]) = vals[p];
  }
  return d;
}

SparseMatrix from_dense(const DenseMatrix& d, double drop_tol) {
  const index_t m = d.nrows();
  const index_t n = d.ncols();
  std::vector<index_t> starts(static_cast<size_t>(m) + 1, 0);
  std::vector<index_t> cols;
  std::vector<double> vals;
  for (index_t i = 0; i < m; ++i) {
    starts[static_cast<size_t>(i)] = static_cast<index_t>(vals.size());
    for (index_t j = 0; j < n; ++j) {
      const double v = d(i, j);
      if (v != 0.0 && std::abs(v) > drop_tol) {
        cols.push_back(j);
        vals.push_back(v);
      }
    }
  }
  starts[static_cast<size_t>(m)] = static_cast<index_t>(vals.size());
  return SparseMatrix(m, n, std::move(starts), std::move(cols), std::move(vals));
}

double power_iteration_radius(const SparseMatrix& a, index_t iters, std::uint64_t seed) {
  if (!a.is_square()) throw ShapeError("power iteration requires a square matrix");
  const index_t n = a.nrows();
  if (n == 0 || a.nnz() == 0) return 0.0;

  SplitMix64 rng(seed);
  std::vector<double> v(static_cast<size_t>(n));
  for (double& x : v) x = 2.0 * rng.next_double() - 1.0;
  double nrm = 0.0;
  for (double x : v) nrm += x * x;
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) return 0.0;
  for (double& x : v) x /= nrm;

  std::vector<double> w(static_cast<size_t>(n));
  double estimate = 0.0;
  for (index_t it = 0; it < iters; ++it) {
    std::fill(w.begin(), w.end(), 0.0);
    for (index_t i = 0; i < n; ++i) {
      auto cols = a.row_cols(i);
      auto vals = a.row_vals(i);
      double s = 0.0;
      for (size_t p = 0; p < cols.size(); ++p) s += vals[p] * v[static_cast<size_t>(cols[p])];
      w[static_cast<size_t>(i)] = s;
    }
    double wn = 0.0;
    for (double x : w) wn += x * x;
    wn = std::sqrt(wn);
    if (wn == 0.0) return 0.0;  // v landed in the null space
    estimate = wn;              // ||A v|| with ||v|| = 1
    for (size_t i = 0; i < w.size(); ++i) v[i] = w[i] / wn;
  }
  return estimate;
}

SparseMatrix assemble_blocks_2x2(index_t n, const SparseMatrix* b11, const SparseMatrix* b12,
                                 const SparseMatrix* b21, const SparseMatrix* b22) {
  const SparseMatrix* blocks[2][2] = {{b11, b12}, {b21, b22}};
  index_t total_nnz = 0;
  for (auto& row : blocks) {
    for (const SparseMatrix* blk : row) {
      if (blk == nullptr) continue;
      if (blk->nrows() != n || blk->ncols() != n) {
        throw ShapeError("block must be n-by-n");
      }
      total_nnz += blk->nnz();
    }
  }
  std::vector<index_t> starts(static_cast<size_t>(2 * n) + 1, 0);
  std::vector<index_t> cols;
  std::vector<double> vals;
  cols.reserve(static_cast<size_t>(total_nnz));
  vals.reserve(static_cast<size_t>(total_nnz));
  for (index_t bi = 0; bi < 2; ++bi) {
    for (index_t i = 0; i < n; ++i) {
      starts[static_cast<size_t>(bi * n + i)] = static_cast<index_t>(vals.size());
      for (index_t bj = 0; bj < 2; ++bj) {
        const SparseMatrix* blk = blocks[bi][bj];
        if (blk == nullptr) continue;
        auto bc = blk->row_cols(i);
        auto bv = blk->row_vals(i);
        for (size_t p = 0; p < bc.size(); ++p) {
          cols.push_back(bj * n + bc[p]);
          vals.push_back(bv[p]);
        }
      }
    }
  }
  starts[static_cast<size_t>(2 * n)] = static_cast<index_t>(vals.size());
  return SparseMatrix(2 * n, 2 * n, std::move(starts), std::move(cols), std::move(vals));
}

SparseMatrix extract_block(const SparseMatrix& a, index_t r0, index_t r1, index_t c0,
                           index_t c1) {
  if (r0 < 0 || r1 > a.nrows() || c0 < 0 || c1 > a.ncols() || r0 > r1 || c0 > c1) {
    throw ShapeError("block range out of bounds");
  }
  const index_t m = r1 - r0;
  std::vector<index_t> starts(static_cast<size_t>(m) + 1, 0);
  std::vector<index_t> cols;
  std::vector<double> vals;
  for (index_t i = 0; i < m; ++i) {
    starts[static_cast<size_t>(i)] = static_cast<index_t>(vals.size());
    auto ac = a.row_cols(r0 + i);
    auto av = a.row_vals(r0 + i);
    auto lo = std::lower_bound(ac.begin(), ac.end(), c0);
    for (auto it = lo; it != ac.end() && *it < c1; ++it) {
      cols.push_back(*it - c0);
      vals.push_back(av[static_cast<size_t>(it - ac.begin())]);
    }
  }
  starts[static_cast<size_t>(m)] = static_cast<index_t>(vals.size());
  return SparseMatrix(m, c1 - c0, std::move(starts), std::move(cols), std::move(vals));
}

}  // namespace signum
