#ifndef SIGNUM_TYPES_HPP
#define SIGNUM_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace signum {

using index_t = std::int64_t;

/// Matrix norms used for residual tracking and filter budget accounting.
enum class NormKind { frobenius, one, inf };

/// Sign-function iteration variants.
enum class Method { nm, ns, nmf, nsf };

const char* to_string(NormKind kind);
const char* to_string(Method method);
NormKind norm_kind_from_string(const std::string& s);
Method method_from_string(const std::string& s);

/// Thrown on dimension mismatches between operands.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an LU pivot falls below the singularity floor.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed or unsupported files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pivot magnitudes below this are treated as structural singularity
// rather than underflow noise.
inline constexpr double kSingularityFloor = 1e-30;

}  // namespace signum

#endif  // SIGNUM_TYPES_HPP
