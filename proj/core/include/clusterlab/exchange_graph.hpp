#pragma once

#include "clusterlab/pattern.hpp"
#include "clusterlab/report.hpp"
#include "clusterlab/seed.hpp"

#include <map>
#include <string>
#include <vector>

namespace clusterlab {

/// Sorted canonical serializations of the cluster variables. `order[s]` is
/// the seed index whose variable sits at sorted position s.
struct CanonicalSeedKey {
  std::vector<std::string> variables;
  std::vector<std::size_t> order;
  /// Two equal serializations inside one cluster.
  bool tie = false;
};

CanonicalSeedKey canonical_key(const Seed& s);

/// One labeled seed met during exploration: the representative of a node or a
/// later sighting of the same unlabeled seed.
struct LabeledSighting {
  Path path;
  CanonicalSeedKey key;
  /// B_t, C_t, G_t of the labeled seed (C from the tropical coefficients,
  /// G from the principal grading).
  PatternNode pattern;
};

struct GraphNode {
  Seed seed;
  LabeledSighting rep;
  std::vector<LabeledSighting> aliases;
  /// All n neighbours are known (and their edges recorded).
  bool expanded = false;
  std::size_t depth = 0;
};

struct GraphEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Mutation index in the labeling of node a's representative.
  std::size_t k = 0;
};

struct ExploreLimits {
  std::size_t max_nodes = 100000;
  std::size_t max_depth = 12;
};

class ExchangeGraph {
 public:
  const ExchangeMatrix& initial_matrix() const noexcept { return b0_; }
  std::size_t rank() const noexcept { return b0_.rank(); }
  const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  bool truncated() const noexcept { return truncated_; }
  const ExploreLimits& limits() const noexcept { return limits_; }

  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t a) const;

  friend ExchangeGraph explore(const ExchangeMatrix& b, ExploreLimits limits);

 private:
  explicit ExchangeGraph(ExchangeMatrix b0) : b0_(std::move(b0)) {}

  ExchangeMatrix b0_;
  ExploreLimits limits_;
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::map<std::vector<std::string>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  bool truncated_ = false;
};

/// BFS over unlabeled seeds with principal coefficients. Nodes at the depth
/// limit, or found after the node limit, are still mutated once so that
/// closure is decided exactly; any unseen neighbour marks the graph truncated.
ExchangeGraph explore(const ExchangeMatrix& b, ExploreLimits limits = {});

/// Every sighting of a node's cluster carries the same y (C) and B under the
/// permutation matching the clusters.
CheckResult verify_cluster_determines_seed(const ExchangeGraph& g);

/// Adjacent iff exactly n-1 common variables. The reverse direction is only
/// conclusive when one endpoint is expanded; truncated graphs report partial.
CheckResult verify_adjacency_common_variables(const ExchangeGraph& g);

/// Distinct nodes have distinct C-matrices (compared with columns sorted, so
/// relabeling is immaterial), and g-vectors and cluster variables determine
/// each other across all sightings.
CheckResult verify_cmatrix_determines_seed(const ExchangeGraph& g);

/// Needs odd rank and an indecomposable B (PreconditionError otherwise).
/// Runs the cluster-determines-seed comparison and asserts that every
/// sighting of the initial cluster has G a permutation matrix with C = G.
CheckResult verify_odd_rank_theorem(const ExchangeGraph& g);

/// DOT text; nodes labeled by 1-based path, edges by 1-based mutation index.
std::string to_dot(const ExchangeGraph& g);

}  // namespace clusterlab
