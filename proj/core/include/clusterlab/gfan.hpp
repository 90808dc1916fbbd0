#pragma once

#include "clusterlab/exchange_matrix.hpp"
#include "clusterlab/pattern.hpp"
#include "clusterlab/report.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace clusterlab {

/// Simplicial cone spanned by n linearly independent integer vectors.
class SimplicialCone {
 public:
  /// Generators are the columns of g. Throws PreconditionError when g is
  /// singular.
  explicit SimplicialCone(IntMatrix g, Path origin = {});

  std::size_t dim() const noexcept { return g_.rows(); }
  const IntMatrix& generator_matrix() const noexcept { return g_; }
  IntVector generator(std::size_t i) const { return g_.column(i); }
  /// Tree path of the G-matrix this cone came from (empty for ad-hoc cones).
  const Path& origin() const noexcept { return origin_; }

  /// Coordinates x with G x = v (exact).
  RationalVector coordinates(const RationalVector& v) const;
  bool contains(const RationalVector& v) const;
  bool contains(const IntVector& v) const;
  /// All coordinates strictly positive.
  bool contains_in_interior(const RationalVector& v) const;

  /// Generators sorted lexicographically; equal for cones with equal
  /// generator sets.
  std::vector<IntVector> sorted_generators() const;

 private:
  IntMatrix g_;
  Path origin_;
  // Inverse of g_ as rationals, row-major.
  std::vector<Rational> inverse_;
};

/// Cone over the columns of a G-matrix; requires |det G| = 1.
SimplicialCone cone_of(const IntMatrix& g, Path origin = {});

/// Extreme rays of sigma(a) intersected with sigma(b), as primitive integer
/// vectors (sorted). Vertex enumeration over tight (n-1)-subsets of the 2n
/// facet inequalities.
std::vector<IntVector> intersection_rays(const SimplicialCone& a, const SimplicialCone& b);

/// The intersection equals the cone over a subset of a's generators.
bool intersection_is_face_of(const SimplicialCone& a, const std::vector<IntVector>& rays);

struct FanReport {
  std::size_t cone_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> face_check_failures;
  /// Set by the coverage test; false until it has run.
  bool complete = false;
  std::size_t points_sampled = 0;
  std::size_t points_uncovered = 0;
  std::size_t points_multiply_covered = 0;

  bool is_fan() const noexcept { return face_check_failures.empty(); }
};

/// Pairwise check that every intersection is a face of both cones. Pairs are
/// split across `threads` workers; the failure list is sorted afterwards.
FanReport check_fan(const std::vector<SimplicialCone>& cones, unsigned threads = 1);

/// Samples random rational points and asks each to lie in at least one closed
/// cone, and in no other cone when interior to one. Fills the coverage fields.
void check_coverage(const std::vector<SimplicialCone>& cones, std::size_t samples, std::uint64_t seed,
                    FanReport& report);

/// Distinct G-cones of the pattern within depth (dedup by generator set).
/// Sets `closed` when no new cone appeared at the last level.
struct GFan {
  std::vector<SimplicialCone> cones;
  bool closed = false;
  std::size_t depth = 0;
};
GFan enumerate_gfan(const ExchangeMatrix& b0, std::size_t depth);

/// Piecewise-linear eta_{t0}^{t1} for the edge t0 --k-- t1 with B0 at t0.
RationalVector eta_map(const IntMatrix& b0, std::size_t k, const RationalVector& w);
IntVector eta_map(const IntMatrix& b0, std::size_t k, const IntVector& w);

/// eta_{t1}^{t0}(eta_{t0}^{t1}(w)) == w with B at t1 equal to mu_k(B0).
bool eta_inverse_check(const IntMatrix& b0, std::size_t k, const RationalVector& w);

/// Composes eta along a tree path starting at B0.
RationalVector eta_along(const IntMatrix& b0, const Path& path, const RationalVector& w);

/// sign(eta_{t0}^t(w)) == sign(eta_{t0}^t(w')) for every t within depth.
bool sign_equivalent(const ExchangeMatrix& b, const RationalVector& w, const RationalVector& w2,
                     std::size_t depth);

/// Maximal cones reachable from the positive orthant through codimension-1
/// common faces; returns the number of reachable cones.
std::size_t transitively_adjacent_count(const std::vector<SimplicialCone>& cones);

/// For every explored node and direction k: eta maps each G-cone generator to
/// the g-vector of a fresh walk rooted at mu_k(t0), and the cone lies in one
/// closed half-space e_k^+ or e_k^-.
CheckResult check_eta_on_gcones(const ExchangeMatrix& b0, std::size_t depth);

/// Every non-negative g-vector column met within depth is a standard basis
/// vector.
CheckResult check_nonnegative_gvectors(const ExchangeMatrix& b0, std::size_t depth);

}  // namespace clusterlab
