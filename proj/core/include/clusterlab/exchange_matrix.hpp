#pragma once

#include "clusterlab/int_matrix.hpp"

#include <cstddef>
#include <optional>

namespace clusterlab {

/// Square integer matrix known to be sign-skew-symmetric: for all i, j,
/// b_ij * b_ji <= 0, and b_ij * b_ji == 0 only when both vanish.
class ExchangeMatrix {
 public:
  /// Throws DimensionError when non-square, PreconditionError when the
  /// sign-skew-symmetry check fails.
  explicit ExchangeMatrix(IntMatrix m);

  static std::optional<ExchangeMatrix> try_make(IntMatrix m);

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t rank() const noexcept { return m_.rows(); }
  const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Matrix mutation at k; the result is re-validated and throws
  /// PreconditionError when sign-skew-symmetry is lost.
  ExchangeMatrix mutate(std::size_t k) const;

  /// -B^T, the matrix driving the dual pattern.
  ExchangeMatrix dual() const;
  ExchangeMatrix transpose() const;
  ExchangeMatrix negate() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  struct Unchecked {};
  ExchangeMatrix(IntMatrix m, Unchecked) : m_(std::move(m)) {}
  IntMatrix m_;
};

bool is_sign_skew_symmetric(const IntMatrix& m);

/// No directed cycle in the digraph with an arc i -> j whenever b_ij > 0.
bool is_acyclic(const ExchangeMatrix& b);

/// Underlying undirected graph (edge when b_ij != 0) is connected.
bool is_indecomposable(const ExchangeMatrix& b);

/// b'_ij = -b_ij if i == k or j == k, else b_ij + sign(b_ik)[b_ik b_kj]_+.
/// Works on rectangular extended matrices as long as k indexes a row and a
/// column. The result is not re-checked for sign-skew-symmetry.
IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k);
inline IntMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  return mutate_matrix(b.matrix(), k);
}

/// Positive integer diagonal D with d_i b_ij = -d_j b_ji, normalized to
/// gcd 1 per connected component; nullopt when none exists.
std::optional<IntVector> skew_symmetrizer(const IntMatrix& b);

struct SSSReport {
  std::size_t verified_depth = 0;
  std::size_t nodes_checked = 0;
  std::optional<Path> failure_path;
  std::optional<IntMatrix> failing_matrix;

  bool ok() const noexcept { return !failure_path.has_value(); }
};

/// Breadth-first search over every reduced mutation sequence of length at most
/// depth. Stops at the first matrix that is not sign-skew-symmetric; with
/// several failures at that level the lexicographically least path wins.
SSSReport verify_totally_sss(const IntMatrix& b, std::size_t depth);

/// [[B, -I], [I, 0]]: the principal extension used by framed quivers.
IntMatrix principal_extension(const IntMatrix& b);

}  // namespace clusterlab
