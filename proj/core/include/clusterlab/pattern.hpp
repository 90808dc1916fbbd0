#pragma once

#include "clusterlab/exchange_matrix.hpp"
#include "clusterlab/report.hpp"

#include <functional>
#include <vector>

namespace clusterlab {

/// Vertex of the matrix pattern: (B_t, C_t, G_t) relative to a fixed initial
/// vertex, with the reduced tree path that leads there.
struct PatternNode {
  ExchangeMatrix b;
  IntMatrix c;
  IntMatrix g;
  Path path;

  static PatternNode initial(const ExchangeMatrix& b0);
  friend bool operator==(const PatternNode&, const PatternNode&) = default;
};

/// The pattern of B (plus) and of -B^T (minus) walked along the same path.
struct LockstepPair {
  PatternNode plus;
  PatternNode minus;

  static LockstepPair initial(const ExchangeMatrix& b0);
};

/// J_k + [eps B]_+^{k.}
IntMatrix c_mutation_factor(const IntMatrix& b, std::size_t k, int eps);
/// J_k + [-eps B]_+^{.k}
IntMatrix g_mutation_factor(const IntMatrix& b, std::size_t k, int eps);

/// C' = C (J_k + [eps B]_+^{k.}), G' = G (J_k + [-eps B]_+^{.k}), B' = mu_k(B)
/// with eps the sign of the k-th column of C. Throws SignUndefinedError when
/// that column is zero or mixes signs.
PatternNode step(const PatternNode& node, std::size_t k);
LockstepPair step(const LockstepPair& pair, std::size_t k);

PatternNode walk_to(const ExchangeMatrix& root, const Path& path);

/// Depth-first walk over reduced paths of length <= depth, children visited in
/// increasing index order, so visit order is lexicographic on paths. The
/// visitor returns false to stop. Returns the number of nodes visited.
std::size_t walk_pattern(const ExchangeMatrix& b0, std::size_t depth,
                         const std::function<bool(const PatternNode&)>& visit);
std::size_t walk_lockstep(const ExchangeMatrix& b0, std::size_t depth,
                          const std::function<bool(const LockstepPair&)>& visit);

bool check_first_duality(const PatternNode& node, const IntMatrix& b0);
bool check_determinants(const PatternNode& node);
bool check_column_sign_coherence(const IntMatrix& c);
bool check_row_sign_coherence(const IntMatrix& g);
bool check_second_duality(const LockstepPair& pair);
/// eps_k(C) == eps_k(C~) for every k, both defined.
bool check_sign_agreement(const LockstepPair& pair);

/// First duality, |det| = 1 and column sign coherence at every node to depth.
CheckResult check_pattern_invariants(const ExchangeMatrix& b0, std::size_t depth);

/// Lockstep sign comparison re-rooted at every distinct exchange matrix met
/// within depth, for B and for -B. Roots with equal matrices share one walk.
CheckResult check_assumption(const ExchangeMatrix& b, std::size_t depth);

/// (G_t)^T C~_t = I at every node of the lockstep walk; also G^{-1} = C~^T.
CheckResult check_second_duality_walk(const ExchangeMatrix& b, std::size_t depth);

/// Re-rooted walk oracle for the dual mutation rules at direction k: part (a)
/// against B^T-pattern walks, (b) against fresh walks from mu_k(t0), (c) and (d)
/// against the -B^T pattern.
CheckResult check_dual_mutation(const ExchangeMatrix& b, std::size_t k, std::size_t depth);

/// g'_k = -g_k; g'_j = g_j + [b_jk]_+ g_k - b_jk min(g_k, 0), with b = B at t0.
IntVector change_initial_gvector(const ExchangeMatrix& b0, std::size_t k, const IntVector& g);

}  // namespace clusterlab
