#ifndef SIGNUM_MATRIX_MARKET_HPP
#define SIGNUM_MATRIX_MARKET_HPP

#include <string>

#include "signum/sparse_matrix.hpp"

namespace signum {

/// Reads a Matrix Market coordinate file (real, general or symmetric;
/// 1-based indices). Symmetric files are expanded to full storage. Throws
/// IoError on malformed headers, out-of-range indices or duplicate entries.
SparseMatrix read_matrix_market(const std::string& path);

/// Writes coordinate format, general symmetry, 1-based indices, 17
/// significant decimal digits (lossless for doubles).
void write_matrix_market(const SparseMatrix& a, const std::string& path);

}  // namespace signum

#endif  // SIGNUM_MATRIX_MARKET_HPP
