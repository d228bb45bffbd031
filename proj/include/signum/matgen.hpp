#ifndef SIGNUM_MATGEN_HPP
#define SIGNUM_MATGEN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "signum/applications.hpp"
#include "signum/sparse_matrix.hpp"

namespace signum {

/// Uniformly random sparse pattern with uniform(0,1) values plus a diagonal
/// shift of 2*n*density that keeps the spectrum clear of the imaginary
/// axis. `raw` disables the shift for faithfulness experiments.
SparseMatrix gen_rand_sparse(index_t n, double density, std::uint64_t seed,
                             bool raw = false);

/// Random sparse symmetric positive definite matrix; the diagonal dominates
/// the off-diagonal row mass so the smallest eigenvalue is at least 0.1.
SparseMatrix gen_rand_spd(index_t n, double density, std::uint64_t seed);

/// Toeplitz band matrix: stencil[k] fills the full diagonal at offsets[k]
/// (diagonal-major semantics, so the band at offset d has length n - |d|).
/// Zero stencil values produce no stored entries.
SparseMatrix gen_banded(index_t n, std::span<const double> stencil,
                        std::span<const index_t> offsets);

/// The banded Riccati benchmark family: pentadiagonal B, tridiagonal C,
/// random SPD D and Q = B D^{-1} B^T symmetrized.
AreProblem gen_are_pair(index_t n, std::uint64_t seed);

/// I - alpha*H for the 0/1 adjacency matrix H of an undirected simple
/// graph. With no explicit alpha, alpha = 0.9 / rho(H) estimated by power
/// iteration, which makes the result positive definite with sign I.
SparseMatrix gen_network_sign_input(std::span<const std::pair<index_t, index_t>> edges,
                                    std::optional<double> alpha = std::nullopt);

/// Synthetic network edges: a chain backbone 0-1-...-n-1 with a local chord
/// (i, i+chord_span) every chord_every nodes. Connected, low bandwidth,
/// scalable.
std::vector<std::pair<index_t, index_t>> gen_chain_network_edges(index_t n,
                                                                 index_t chord_span = 3,
                                                                 index_t chord_every = 4);

}  // namespace signum

#endif  // SIGNUM_MATGEN_HPP
