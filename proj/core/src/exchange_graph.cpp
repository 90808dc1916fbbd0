#include "clusterlab/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace clusterlab {

CanonicalSeedKey canonical_key(const Seed& s) {
  const std::size_t n = s.rank();
  std::vector<std::string> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = s.cluster()[i].canonical_string();
  CanonicalSeedKey key;
  key.order.resize(n);
  std::iota(key.order.begin(), key.order.end(), 0);
  std::stable_sort(key.order.begin(), key.order.end(), [&](auto a, auto b) { return raw[a] < raw[b]; });
  for (auto i : key.order) key.variables.push_back(raw[i]);
  key.tie = std::adjacent_find(key.variables.begin(), key.variables.end()) != key.variables.end();
  return key;
}

bool ExchangeGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& adj = adjacency_.at(a);
  return std::find(adj.begin(), adj.end(), b) != adj.end();
}

std::size_t ExchangeGraph::degree(std::size_t a) const { return adjacency_.at(a).size(); }

namespace {

LabeledSighting sighting(const Seed& s, Path path) {
  PatternNode pattern{s.exchange_matrix(), s.coefficient_matrix(), g_matrix_from_grading(s), path};
  return LabeledSighting{std::move(path), canonical_key(s), std::move(pattern)};
}

// Compares two sightings of one cluster under the matching permutation.
std::string compare_sightings(const LabeledSighting& rep, const LabeledSighting& other) {
  const std::size_t n = rep.key.order.size();
  const auto& p = rep.key.order;
  const auto& q = other.key.order;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (rep.pattern.b.matrix()(p[i], p[j]) != other.pattern.b.matrix()(q[i], q[j]))
        return "exchange matrices differ under the cluster permutation";
    if (rep.pattern.c.column(p[i]) != other.pattern.c.column(q[i]))
      return "coefficients differ under the cluster permutation";
  }
  return {};
}

IntMatrix sorted_columns(const IntMatrix& m) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  std::sort(cols.begin(), cols.end());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, cols[j]);
  return out;
}

template <class F>
void for_each_sighting(const ExchangeGraph& g, F&& f) {
  for (std::size_t id = 0; id < g.nodes().size(); ++id) {
    f(id, g.nodes()[id].rep);
    for (const auto& a : g.nodes()[id].aliases) f(id, a);
  }
}

}  // namespace

ExchangeGraph explore(const ExchangeMatrix& b, ExploreLimits limits) {
  ExchangeGraph g(b);
  g.limits_ = limits;
  const std::size_t n = b.rank();
  std::set<std::pair<std::size_t, std::size_t>> edge_set;

  auto add_node = [&](Seed s, Path path, std::size_t depth) {
    LabeledSighting rep = sighting(s, std::move(path));
    GraphNode node{std::move(s), std::move(rep), {}, false, depth};
    g.index_.emplace(node.rep.key.variables, g.nodes_.size());
    g.nodes_.push_back(std::move(node));
    g.adjacency_.emplace_back();
    return g.nodes_.size() - 1;
  };

  add_node(make_principal_seed(b), {}, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const bool may_grow = g.nodes_[id].depth < limits.max_depth;
    bool complete = true;
    for (std::size_t k = 0; k < n; ++k) {
      Seed child = mutate_seed(g.nodes_[id].seed, k);
      Path path = g.nodes_[id].rep.path;
      path.push_back(k);
      auto key = canonical_key(child);
      auto it = g.index_.find(key.variables);
      std::size_t other;
      if (it != g.index_.end()) {
        other = it->second;
        g.nodes_[other].aliases.push_back(sighting(child, std::move(path)));
      } else if (may_grow && g.nodes_.size() < limits.max_nodes) {
        other = add_node(std::move(child), std::move(path), g.nodes_[id].depth + 1);
        queue.push_back(other);
      } else {
        complete = false;
        g.truncated_ = true;
        continue;
      }
      if (edge_set.insert({std::min(id, other), std::max(id, other)}).second) {
        g.edges_.push_back({id, other, k});
        g.adjacency_[id].push_back(other);
        g.adjacency_[other].push_back(id);
      }
    }
    g.nodes_[id].expanded = complete;
  }
  return g;
}

CheckResult verify_cluster_determines_seed(const ExchangeGraph& g) {
  CheckResult r;
  r.name = "cluster";
  for (const auto& node : g.nodes()) {
    ++r.explored;
    if (node.rep.key.tie) return CheckResult::failure(r.name, node.rep.path, "repeated variable inside one cluster");
    for (const auto& a : node.aliases) {
      if (auto msg = compare_sightings(node.rep, a); !msg.empty()) {
        auto f = CheckResult::failure(r.name, a.path, msg);
        f.root = node.rep.path;
        return f;
      }
    }
  }
  if (g.truncated()) r.detail = "checked on a truncated graph";
  return r;
}

CheckResult verify_adjacency_common_variables(const ExchangeGraph& g) {
  CheckResult r;
  r.name = "adjacency";
  const std::size_t n = g.rank();
  const auto& nodes = g.nodes();
  std::size_t inconclusive = 0;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const auto& va = nodes[a].rep.key.variables;
      const auto& vb = nodes[b].rep.key.variables;
      std::vector<std::string> common;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
      const bool adj = g.adjacent(a, b);
      ++r.explored;
      if (adj && common.size() + 1 != n) {
        auto f = CheckResult::failure(r.name, nodes[b].rep.path, "adjacent seeds without n-1 common variables");
        f.root = nodes[a].rep.path;
        return f;
      }
      if (!adj && common.size() + 1 == n) {
        if (nodes[a].expanded || nodes[b].expanded) {
          auto f = CheckResult::failure(r.name, nodes[b].rep.path, "n-1 common variables but not adjacent");
          f.root = nodes[a].rep.path;
          return f;
        }
        ++inconclusive;
      }
    }
  }
  if (g.truncated() || inconclusive > 0) {
    r.status = Status::partial;
    r.detail = "forward direction verified; reverse direction partial on a truncated graph (" +
               std::to_string(inconclusive) + " inconclusive pairs)";
  }
  return r;
}

CheckResult verify_cmatrix_determines_seed(const ExchangeGraph& g) {
  CheckResult r;
  r.name = "cmatrix";
  std::map<IntMatrix, std::size_t> by_c;
  for (std::size_t id = 0; id < g.nodes().size(); ++id) {
    ++r.explored;
    const auto& rep = g.nodes()[id].rep;
    auto [it, fresh] = by_c.emplace(sorted_columns(rep.pattern.c), id);
    if (!fresh) {
      auto f = CheckResult::failure(r.name, rep.path, "C-matrix shared by two distinct seeds");
      f.root = g.nodes()[it->second].rep.path;
      return f;
    }
  }
  std::map<IntVector, std::string> var_of;
  std::map<std::string, IntVector> gvec_of;
  std::optional<CheckResult> bad;
  for_each_sighting(g, [&](std::size_t, const LabeledSighting& s) {
    if (bad) return;
    for (std::size_t pos = 0; pos < s.key.order.size(); ++pos) {
      const std::size_t i = s.key.order[pos];
      const IntVector gv = s.pattern.g.column(i);
      const std::string& var = s.key.variables[pos];
      auto [a, fa] = var_of.emplace(gv, var);
      auto [b, fb] = gvec_of.emplace(var, gv);
      if (a->second != var || b->second != gv) {
        bad = CheckResult::failure(r.name, s.path,
                                   "g-vector and cluster variable " + std::to_string(i + 1) + " do not correspond");
        return;
      }
    }
  });
  if (bad) return *bad;
  r.detail = std::to_string(var_of.size()) + " g-vectors, " + std::to_string(gvec_of.size()) + " variables";
  return r;
}

CheckResult verify_odd_rank_theorem(const ExchangeGraph& g) {
  const std::size_t n = g.rank();
  if (n % 2 == 0) throw PreconditionError("odd-rank check needs odd rank, got " + std::to_string(n));
  if (!is_indecomposable(g.initial_matrix()))
    throw PreconditionError("odd-rank check needs an indecomposable exchange matrix");
  CheckResult r = verify_cluster_determines_seed(g);
  r.name = "oddrank";
  if (!r.passed()) return r;
  // Node 0 is the initial cluster; every sighting of it must be a relabeling
  // of the initial seed itself, never of -B.
  const auto& init = g.nodes().front();
  std::vector<const LabeledSighting*> all{&init.rep};
  for (const auto& a : init.aliases) all.push_back(&a);
  for (const auto* s : all) {
    if (!is_permutation_matrix(s->pattern.g))
      return CheckResult::failure(r.name, s->path, "G is not a permutation matrix at the initial cluster");
    if (s->pattern.c != s->pattern.g)
      return CheckResult::failure(r.name, s->path, "C differs from G at the initial cluster");
  }
  return r;
}

std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t id = 0; id < g.nodes().size(); ++id) {
    const auto& p = g.nodes()[id].rep.path;
    os << "  n" << id + 1 << " [label=\"" << (p.empty() ? std::string("t0") : format_path(p)) << "\"];\n";
  }
  for (const auto& e : g.edges()) os << "  n" << e.a + 1 << " -- n" << e.b + 1 << " [label=\"" << e.k + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace clusterlab
