#pragma once

#include "clusterlab/int_matrix.hpp"
#include "clusterlab/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clusterlab {

/// Permutation in one-line notation, 0-based: p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

/// Finite skew-symmetric quiver with frozen vertices and a permutation group
/// given by generators.
class ActedQuiver {
 public:
  /// Throws DimensionError / PreconditionError when the matrix is not
  /// skew-symmetric, a generator is not a permutation, or frozen indices are
  /// out of range.
  ActedQuiver(IntMatrix b, std::vector<bool> frozen, std::vector<Permutation> generators);

  std::size_t size() const noexcept { return b_.rows(); }
  const IntMatrix& matrix() const noexcept { return b_; }
  const std::vector<bool>& frozen() const noexcept { return frozen_; }
  bool is_frozen(std::size_t i) const { return frozen_.at(i); }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  /// Orbits of the generated group, each sorted, ordered by smallest element.
  std::vector<std::vector<std::size_t>> orbits() const;
  /// Orbit containing i.
  std::vector<std::size_t> orbit_of(std::size_t i) const;

  ActedQuiver with_matrix(IntMatrix b) const;

  friend bool operator==(const ActedQuiver&, const ActedQuiver&) = default;

 private:
  IntMatrix b_;
  std::vector<bool> frozen_;
  std::vector<Permutation> gens_;
};

/// Group element together with a word in the generators that produces it
/// (generator indices, applied left to right).
struct GroupElement {
  Permutation perm;
  std::vector<std::size_t> word;
};

/// Element bound for group closure: CLUSTERLAB_MAX_GROUP or 10^4.
std::size_t max_group_size();

/// All elements generated by `gens` on {0..n-1}, identity first, in BFS order
/// of word length. Throws GroupTooLargeError past `bound` elements.
std::vector<GroupElement> close_group(std::size_t n, const std::vector<Permutation>& gens,
                                      std::size_t bound = max_group_size());

struct AdmissibilityResult {
  bool admissible = true;
  /// "i", "ii", "iii", "iv" or empty.
  std::string violated_condition;
  std::vector<std::size_t> witness_vertices;
  std::vector<std::size_t> witness_word;
};

AdmissibilityResult check_admissible(const ActedQuiver& q);

/// Closed-form orbit mutation at the orbit of k. Throws PreconditionError for
/// non-admissible input or frozen k.
ActedQuiver orbit_mutate(const ActedQuiver& q, std::size_t k);

/// Product of single-vertex mutations over the orbit of k (cross-check).
IntMatrix composed_orbit_mutation(const IntMatrix& b, const std::vector<std::size_t>& orbit);

/// b_{[i][j]} = sum over i' in [i] of b_{i'j}, j the smallest element of its
/// orbit. Rows and columns follow orbits().
IntMatrix fold_matrix(const ActedQuiver& q);

/// Adds a frozen copy n+i of each vertex i with an arrow (n+i) -> i; the
/// action is extended by g(n+i) = n+g(i).
ActedQuiver frame(const ActedQuiver& q);

/// No mutable k with arrows i' -> k -> j' between frozen i', j'.
bool check_no_frozen_paths(const ActedQuiver& q);

/// c_{g(i')g(j)} = c_{i'j} for frozen i', mutable j and every generator g.
bool check_frozen_equivariance(const ActedQuiver& q);

/// Walks orbit-mutation sequences (consecutive repeats removed) up to depth.
/// At each node: admissibility, closed form vs composed mutations, and the
/// folding square fold(mu_[k] Q) = mu_[k] fold(Q). On quivers with frozen
/// vertices also the frozen-path exclusion and frozen equivariance. Witness
/// paths hold the smallest vertex of each mutated orbit.
CheckResult verify_globally_foldable(const ActedQuiver& q, std::size_t depth);

}  // namespace clusterlab
