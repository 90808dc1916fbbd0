#include "clusterlab/pattern.hpp"

#include <algorithm>
#include <set>

namespace clusterlab {

namespace {

bool is_signed_unit(const IntVector& v, std::size_t j) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == j) {
      if (v[i] != 1 && v[i] != -1) return false;
    } else if (v[i] != 0) {
      return false;
    }
  }
  return true;
}

template <class Node, class Visit>
std::size_t dfs(const Node& node, std::size_t remaining, std::size_t n, const Visit& visit, bool& stop) {
  if (!visit(node)) {
    stop = true;
    return 1;
  }
  std::size_t count = 1;
  if (remaining == 0) return count;
  for (std::size_t k = 0; k < n && !stop; ++k) {
    const Path& p = [&]() -> const Path& {
      if constexpr (std::is_same_v<Node, PatternNode>)
        return node.path;
      else
        return node.plus.path;
    }();
    if (!p.empty() && p.back() == k) continue;
    count += dfs(step(node, k), remaining - 1, n, visit, stop);
  }
  return count;
}

std::string describe(const PatternNode& node) {
  return "B=" + node.b.matrix().to_string() + " C=" + node.c.to_string() + " G=" + node.g.to_string();
}

}  // namespace

PatternNode PatternNode::initial(const ExchangeMatrix& b0) {
  const auto n = b0.rank();
  return PatternNode{b0, IntMatrix::identity(n), IntMatrix::identity(n), {}};
}

LockstepPair LockstepPair::initial(const ExchangeMatrix& b0) {
  return LockstepPair{PatternNode::initial(b0), PatternNode::initial(b0.dual())};
}

IntMatrix c_mutation_factor(const IntMatrix& b, std::size_t k, int eps) {
  const IntMatrix scaled = eps > 0 ? b : -b;
  return j_matrix(b.rows(), k) + row_trunc(bracket_plus(scaled), k);
}

IntMatrix g_mutation_factor(const IntMatrix& b, std::size_t k, int eps) {
  const IntMatrix scaled = eps > 0 ? -b : b;
  return j_matrix(b.rows(), k) + col_trunc(bracket_plus(scaled), k);
}

PatternNode step(const PatternNode& node, std::size_t k) {
  if (k >= node.b.rank()) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range");
  const int eps = coherent_sign(node.c.column(k));
  if (eps == 0)
    throw SignUndefinedError("column " + std::to_string(k + 1) + " of C is not sign-coherent at " +
                                 format_path(node.path),
                             node.path);
  const IntMatrix& b = node.b.matrix();
  return PatternNode{node.b.mutate(k), node.c * c_mutation_factor(b, k, eps),
                     node.g * g_mutation_factor(b, k, eps), extend_reduced(node.path, k)};
}

LockstepPair step(const LockstepPair& pair, std::size_t k) {
  return LockstepPair{step(pair.plus, k), step(pair.minus, k)};
}

PatternNode walk_to(const ExchangeMatrix& root, const Path& path) {
  PatternNode node = PatternNode::initial(root);
  for (auto k : path) node = step(node, k);
  return node;
}

std::size_t walk_pattern(const ExchangeMatrix& b0, std::size_t depth,
                         const std::function<bool(const PatternNode&)>& visit) {
  bool stop = false;
  return dfs(PatternNode::initial(b0), depth, b0.rank(), visit, stop);
}

std::size_t walk_lockstep(const ExchangeMatrix& b0, std::size_t depth,
                          const std::function<bool(const LockstepPair&)>& visit) {
  bool stop = false;
  return dfs(LockstepPair::initial(b0), depth, b0.rank(), visit, stop);
}

bool check_first_duality(const PatternNode& node, const IntMatrix& b0) {
  return node.g * node.b.matrix() == b0 * node.c;
}

bool check_determinants(const PatternNode& node) {
  const Int dg = node.g.determinant();
  const Int dc = node.c.determinant();
  return dg == dc && (dg == 1 || dg == -1);
}

bool check_column_sign_coherence(const IntMatrix& c) {
  for (std::size_t j = 0; j < c.cols(); ++j)
    if (coherent_sign(c.column(j)) == 0) return false;
  return true;
}

bool check_row_sign_coherence(const IntMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (coherent_sign(g.row(i)) == 0) return false;
  return true;
}

bool check_second_duality(const LockstepPair& pair) {
  return pair.plus.g.transpose() * pair.minus.c == IntMatrix::identity(pair.plus.b.rank());
}

bool check_sign_agreement(const LockstepPair& pair) {
  for (std::size_t k = 0; k < pair.plus.b.rank(); ++k) {
    const int a = coherent_sign(pair.plus.c.column(k));
    const int b = coherent_sign(pair.minus.c.column(k));
    if (a == 0 || a != b) return false;
  }
  return true;
}

CheckResult check_pattern_invariants(const ExchangeMatrix& b0, std::size_t depth) {
  CheckResult r;
  r.name = "pattern_invariants";
  r.verified_depth = depth;
  try {
    r.explored = walk_pattern(b0, depth, [&](const PatternNode& node) {
      std::string what;
      if (!check_first_duality(node, b0.matrix()))
        what = "first duality G B = B0 C";
      else if (!check_determinants(node))
        what = "det G = det C = +-1";
      else if (!check_column_sign_coherence(node.c))
        what = "column sign coherence of C";
      if (what.empty()) return true;
      r = CheckResult::failure(r.name, node.path, what + " fails: " + describe(node));
      return false;
    });
  } catch (const SignUndefinedError& e) {
    r = CheckResult::failure(r.name, e.path(), e.what());
  } catch (const PreconditionError& e) {
    r = CheckResult::failure(r.name, {}, e.what());
  }
  if (!r.passed()) r.verified_depth = r.witness ? (r.witness->empty() ? 0 : r.witness->size() - 1) : 0;
  return r;
}

CheckResult check_assumption(const ExchangeMatrix& b, std::size_t depth) {
  CheckResult r;
  r.name = "assumption";
  r.verified_depth = depth;

  // Distinct roots: every B_t and -B_t within depth, first path that reaches it.
  std::vector<std::pair<ExchangeMatrix, Path>> roots;
  std::set<IntMatrix> seen;
  try {
    walk_pattern(b, depth, [&](const PatternNode& node) {
      for (const auto& m : {node.b, node.b.negate()})
        if (seen.insert(m.matrix()).second) roots.emplace_back(m, node.path);
      return true;
    });
  } catch (const Error& e) {
    return CheckResult::failure(r.name, {}, e.what());
  }

  for (const auto& [root, root_path] : roots) {
    CheckResult sub;
    sub.name = r.name;
    sub.verified_depth = depth;
    try {
      sub.explored = walk_lockstep(root, depth, [&](const LockstepPair& pair) {
        if (pair.minus.b.matrix() != -pair.plus.b.matrix().transpose()) {
          sub = CheckResult::failure(r.name, pair.plus.path, "dual pattern drifted from -B_t^T");
          return false;
        }
        if (!check_sign_agreement(pair)) {
          sub = CheckResult::failure(r.name, pair.plus.path,
                                     "column signs differ: C=" + pair.plus.c.to_string() +
                                         " C~=" + pair.minus.c.to_string());
          return false;
        }
        return true;
      });
    } catch (const SignUndefinedError& e) {
      sub = CheckResult::failure(r.name, e.path(), e.what());
    }
    if (!sub.passed()) sub.root = root_path;
    r = merge(std::move(r), sub);
  }
  if (!r.passed()) r.detail += " (root matrix reached by " + format_path(*r.root) + ")";
  return r;
}

CheckResult check_second_duality_walk(const ExchangeMatrix& b, std::size_t depth) {
  CheckResult r;
  r.name = "second_duality";
  r.verified_depth = depth;
  const std::size_t n = b.rank();
  try {
    r.explored = walk_lockstep(b, depth, [&](const LockstepPair& pair) {
      if (!check_second_duality(pair)) {
        r = CheckResult::failure(r.name, pair.plus.path,
                                 "G^T C~ != I: G=" + pair.plus.g.to_string() + " C~=" + pair.minus.c.to_string());
        return false;
      }
      // Consequently G * C~^T = I as well.
      if (pair.plus.g * pair.minus.c.transpose() != IntMatrix::identity(n)) {
        r = CheckResult::failure(r.name, pair.plus.path, "G^{-1} != C~^T");
        return false;
      }
      return true;
    });
  } catch (const SignUndefinedError& e) {
    r = CheckResult::failure(r.name, e.path(), e.what());
  }
  return r;
}

CheckResult check_dual_mutation(const ExchangeMatrix& b, std::size_t k, std::size_t depth) {
  CheckResult r;
  r.name = "dual_mutation";
  r.verified_depth = depth;
  const std::size_t n = b.rank();
  if (k >= n) throw IndexError("dual-mutation direction out of range");
  const IntMatrix& b0 = b.matrix();
  const ExchangeMatrix b1 = b.mutate(k);
  try {
    r.explored = walk_lockstep(b, depth, [&](const LockstepPair& pair) {
      const PatternNode& t = pair.plus;
      auto fail = [&](std::string what) {
        r = CheckResult::failure(r.name, t.path, std::move(what));
        return false;
      };

      // (a) C_t^{t0} = (Gbar_{t0}^t)^T and G_t^{t0} = (Cbar_{t0}^t)^T, where the
      // bar pattern is for B^T rooted at t and walked back to t0.
      Path back(t.path.rbegin(), t.path.rend());
      const PatternNode bar = walk_to(t.b.transpose(), back);
      if (t.c != bar.g.transpose()) return fail("(a) C_t != Gbar^T: C=" + t.c.to_string());
      if (t.g != bar.c.transpose()) return fail("(a) G_t != Cbar^T: G=" + t.g.to_string());
      if (!check_row_sign_coherence(t.g)) return fail("(a) G row sign coherence: G=" + t.g.to_string());

      // (b) against a fresh walk rooted at t1 = mu_k(t0).
      Path from_t1{k};
      from_t1.insert(from_t1.end(), t.path.begin(), t.path.end());
      const PatternNode re = walk_to(b1, reduce_path(from_t1));
      const int eps = coherent_sign(t.g.row(k));
      const IntMatrix c_pred = c_mutation_factor(b0, k, -eps) * t.c;
      const IntMatrix g_pred = (j_matrix(n, k) + col_trunc(bracket_plus(eps > 0 ? b0 : -b0), k)) * t.g;
      if (re.c != c_pred)
        return fail("(b) C_t^{t1}: walk " + re.c.to_string() + " vs formula " + c_pred.to_string());
      if (re.g != g_pred)
        return fail("(b) G_t^{t1}: walk " + re.g.to_string() + " vs formula " + g_pred.to_string());

      // (c) columns of C and C~ are +-e_j together.
      const PatternNode& dual = pair.minus;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (is_signed_unit(t.c.column(i), j) != is_signed_unit(dual.c.column(i), j))
            return fail("(c) column " + std::to_string(i + 1) + " unit-vector mismatch");

      // (d) rows of G and G~ share signs and are +-e_j together.
      for (std::size_t i = 0; i < n; ++i) {
        const int sg = coherent_sign(t.g.row(i));
        const int sd = coherent_sign(dual.g.row(i));
        if (sg == 0 || sg != sd) return fail("(d) row " + std::to_string(i + 1) + " signs of G and G~ differ");
        for (std::size_t j = 0; j < n; ++j)
          if (is_signed_unit(t.g.row(i), j) != is_signed_unit(dual.g.row(i), j))
            return fail("(d) row " + std::to_string(i + 1) + " unit-vector mismatch");
      }
      return true;
    });
  } catch (const SignUndefinedError& e) {
    r = CheckResult::failure(r.name, e.path(), e.what());
  }
  return r;
}

IntVector change_initial_gvector(const ExchangeMatrix& b0, std::size_t k, const IntVector& g) {
  const std::size_t n = b0.rank();
  if (k >= n) throw IndexError("mutation index out of range");
  if (g.size() != n) throw DimensionError("g-vector length mismatch");
  IntVector out(n);
  const Int gk_min = g[k] < 0 ? g[k] : Int(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k)
      out[j] = -g[k];
    else
      out[j] = g[j] + positive_part(b0(j, k)) * g[k] - b0(j, k) * gk_min;
  }
  return out;
}

}  // namespace clusterlab
