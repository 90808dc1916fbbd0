#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterlab {

/// Arbitrary-precision integer used for every matrix entry and coefficient.
using Int = mpz_class;
/// Exact rational used by cone membership and the eta maps.
using Rational = mpq_class;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

/// Mutation sequence. Stored 0-based; serialized 1-based.
using Path = std::vector<std::size_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exactness guarantee fails (non-Laurent quotient, inhomogeneous
/// cluster variable, ...). Always indicates a bug or a broken precondition.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Sign of a zero column or row was requested.
class SignUndefinedError : public Error {
 public:
  SignUndefinedError(const std::string& what, Path path)
      : Error(what), path_(std::move(path)) {}
  const Path& path() const noexcept { return path_; }

 private:
  Path path_;
};

class GroupTooLargeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline int sign(const Int& v) { return sgn(v); }
inline Int positive_part(const Int& v) { return v > 0 ? v : Int(0); }

/// 1-based rendering of a path, e.g. "(1,2,1)".
std::string format_path(const Path& path);

/// Appends k to path, cancelling an immediate repeat (tree reduction).
Path extend_reduced(Path path, std::size_t k);

/// Reduced word for the tree path obtained by concatenation.
Path reduce_path(const Path& path);

/// Every reduced path over {0..n-1} of length at most depth, in
/// lexicographic (depth-first) order, starting with the empty path.
std::vector<Path> reduced_paths(std::size_t n, std::size_t depth);

}  // namespace clusterlab
