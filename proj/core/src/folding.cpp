#include "clusterlab/folding.hpp"

#include "clusterlab/exchange_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

namespace clusterlab {

namespace {

void validate_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) throw DimensionError("action generator has wrong length");
  std::vector<bool> hit(n, false);
  for (auto v : p) {
    if (v >= n || hit[v]) throw PreconditionError("action generator is not a permutation");
    hit[v] = true;
  }
}

Permutation compose(const Permutation& first, const Permutation& then) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

}  // namespace

ActedQuiver::ActedQuiver(IntMatrix b, std::vector<bool> frozen, std::vector<Permutation> generators)
    : b_(std::move(b)), frozen_(std::move(frozen)), gens_(std::move(generators)) {
  if (!b_.is_square()) throw DimensionError("quiver matrix must be square");
  if (frozen_.empty()) frozen_.assign(b_.rows(), false);
  if (frozen_.size() != b_.rows()) throw DimensionError("frozen mask has wrong length");
  if (b_.transpose() != -b_) throw PreconditionError("quiver matrix must be skew-symmetric");
  for (const auto& g : gens_) validate_permutation(g, b_.rows());
}

std::vector<std::vector<std::size_t>> ActedQuiver::orbits() const {
  const std::size_t n = size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < n; ++i) {
      auto a = find(i), b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, orbit] : by_root) out.push_back(std::move(orbit));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> ActedQuiver::orbit_of(std::size_t i) const {
  if (i >= size()) throw IndexError("vertex out of range");
  for (auto& o : orbits())
    if (std::binary_search(o.begin(), o.end(), i)) return o;
  return {i};
}

ActedQuiver ActedQuiver::with_matrix(IntMatrix b) const { return ActedQuiver(std::move(b), frozen_, gens_); }

std::size_t max_group_size() {
  if (const char* env = std::getenv("CLUSTERLAB_MAX_GROUP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

std::vector<GroupElement> close_group(std::size_t n, const std::vector<Permutation>& gens, std::size_t bound) {
  for (const auto& g : gens) validate_permutation(g, n);
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<GroupElement> elems{{id, {}}};
  std::map<Permutation, std::size_t> seen{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation p = compose(elems[head].perm, gens[gi]);
      if (seen.count(p)) continue;
      if (elems.size() >= bound)
        throw GroupTooLargeError("group closure exceeds " + std::to_string(bound) + " elements");
      auto word = elems[head].word;
      word.push_back(gi);
      seen.emplace(p, elems.size());
      elems.push_back({std::move(p), std::move(word)});
    }
  }
  return elems;
}

AdmissibilityResult check_admissible(const ActedQuiver& q) {
  const std::size_t n = q.size();
  const IntMatrix& b = q.matrix();
  AdmissibilityResult r;
  auto fail = [&](std::string cond, std::vector<std::size_t> verts, std::vector<std::size_t> word) {
    r.admissible = false;
    r.violated_condition = std::move(cond);
    r.witness_vertices = std::move(verts);
    r.witness_word = std::move(word);
    return r;
  };
  // (i) and (ii) are closed under composition, so generators suffice. (iii) is
  // checked before (ii): a vertex adjacent to its own image is reported as such.
  for (std::size_t gi = 0; gi < q.generators().size(); ++gi) {
    const auto& g = q.generators()[gi];
    for (std::size_t i = 0; i < n; ++i)
      if (q.is_frozen(i) != q.is_frozen(g[i])) return fail("i", {i}, {gi});
  }
  const auto group = close_group(n, q.generators());
  for (const auto& e : group) {
    for (std::size_t i = 0; i < n; ++i)
      if (!q.is_frozen(i) && b(i, e.perm[i]) != 0) return fail("iii", {i, e.perm[i]}, e.word);
  }
  for (std::size_t gi = 0; gi < q.generators().size(); ++gi) {
    const auto& g = q.generators()[gi];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (b(i, j) != b(g[i], g[j])) return fail("ii", {i, j}, {gi});
  }
  for (const auto& e : group) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!q.is_frozen(j) && b(i, j) * b(e.perm[i], j) < 0) return fail("iv", {i, j}, e.word);
  }
  return r;
}

IntMatrix composed_orbit_mutation(const IntMatrix& b, const std::vector<std::size_t>& orbit) {
  IntMatrix m = b;
  for (auto p : orbit) m = mutate_matrix(m, p);
  return m;
}

ActedQuiver orbit_mutate(const ActedQuiver& q, std::size_t k) {
  if (k >= q.size()) throw IndexError("mutation vertex out of range");
  if (q.is_frozen(k)) throw PreconditionError("cannot mutate at a frozen vertex");
  const auto adm = check_admissible(q);
  if (!adm.admissible)
    throw PreconditionError("orbit mutation needs an admissible quiver (condition " + adm.violated_condition + ")");
  const auto orbit = q.orbit_of(k);
  const IntMatrix& b = q.matrix();
  const std::size_t n = q.size();
  std::vector<bool> in_orbit(n, false);
  for (auto p : orbit) in_orbit[p] = true;
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (in_orbit[i] || in_orbit[j]) {
        out(i, j) = -b(i, j);
        continue;
      }
      Int v = b(i, j);
      for (auto p : orbit) v += (abs(b(i, p)) * b(p, j) + b(i, p) * abs(b(p, j))) / 2;
      out(i, j) = v;
    }
  }
  return q.with_matrix(std::move(out));
}

IntMatrix fold_matrix(const ActedQuiver& q) {
  const auto adm = check_admissible(q);
  if (!adm.admissible)
    throw PreconditionError("folding needs an admissible quiver (condition " + adm.violated_condition + ")");
  const auto orbits = q.orbits();
  IntMatrix out(orbits.size(), orbits.size());
  for (std::size_t a = 0; a < orbits.size(); ++a)
    for (std::size_t c = 0; c < orbits.size(); ++c) {
      Int s = 0;
      for (auto i : orbits[a]) s += q.matrix()(i, orbits[c].front());
      out(a, c) = s;
    }
  return out;
}

ActedQuiver frame(const ActedQuiver& q) {
  const std::size_t n = q.size();
  if (std::any_of(q.frozen().begin(), q.frozen().end(), [](bool f) { return f; }))
    throw UnsupportedError("framing a quiver that already has frozen vertices");
  IntMatrix b(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = q.matrix()(i, j);
    b(n + i, i) = 1;
    b(i, n + i) = -1;
  }
  std::vector<bool> frozen(2 * n, false);
  for (std::size_t i = n; i < 2 * n; ++i) frozen[i] = true;
  std::vector<Permutation> gens;
  for (const auto& g : q.generators()) {
    Permutation e(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = g[i];
      e[n + i] = n + g[i];
    }
    gens.push_back(std::move(e));
  }
  return ActedQuiver(std::move(b), std::move(frozen), std::move(gens));
}

bool check_no_frozen_paths(const ActedQuiver& q) {
  const std::size_t n = q.size();
  const IntMatrix& b = q.matrix();
  for (std::size_t k = 0; k < n; ++k) {
    if (q.is_frozen(k)) continue;
    bool in = false, out = false;
    for (std::size_t f = 0; f < n; ++f) {
      if (!q.is_frozen(f)) continue;
      in = in || b(f, k) > 0;
      out = out || b(k, f) > 0;
    }
    if (in && out) return false;
  }
  return true;
}

bool check_frozen_equivariance(const ActedQuiver& q) {
  const std::size_t n = q.size();
  const IntMatrix& b = q.matrix();
  for (const auto& g : q.generators())
    for (std::size_t f = 0; f < n; ++f) {
      if (!q.is_frozen(f)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!q.is_frozen(j) && b(g[f], g[j]) != b(f, j)) return false;
    }
  return true;
}

CheckResult verify_globally_foldable(const ActedQuiver& q, std::size_t depth) {
  CheckResult r;
  r.name = "globally_foldable";
  r.verified_depth = depth;
  std::vector<std::size_t> reps;
  for (const auto& o : q.orbits())
    if (!q.is_frozen(o.front())) reps.push_back(o.front());
  const bool framed = std::any_of(q.frozen().begin(), q.frozen().end(), [](bool f) { return f; });

  auto node_check = [&](const ActedQuiver& node) -> std::string {
    const auto adm = check_admissible(node);
    if (!adm.admissible) return "condition (" + adm.violated_condition + ") fails";
    if (framed && !check_no_frozen_paths(node)) return "frozen path i' -> k -> j'";
    if (framed && !check_frozen_equivariance(node)) return "frozen part not equivariant";
    return {};
  };

  struct Frame {
    ActedQuiver node;
    Path path;
  };
  std::vector<Frame> stack{{q, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    ++r.explored;
    if (auto msg = node_check(f.node); !msg.empty()) return CheckResult::failure(r.name, f.path, msg);
    if (f.path.size() == depth) continue;
    const IntMatrix folded = fold_matrix(f.node);
    const auto orbits = f.node.orbits();
    for (auto it = reps.rbegin(); it != reps.rend(); ++it) {
      const std::size_t k = *it;
      if (!f.path.empty() && f.path.back() == k) continue;
      ActedQuiver next = orbit_mutate(f.node, k);
      Path path = f.path;
      path.push_back(k);
      if (next.matrix() != composed_orbit_mutation(f.node.matrix(), f.node.orbit_of(k)))
        return CheckResult::failure(r.name, path, "closed-form orbit mutation differs from composed mutations");
      if (auto msg = node_check(next); !msg.empty()) return CheckResult::failure(r.name, path, msg);
      std::size_t orbit_index = 0;
      while (orbits[orbit_index].front() != k) ++orbit_index;
      if (fold_matrix(next) != mutate_matrix(folded, orbit_index))
        return CheckResult::failure(r.name, path, "folding does not commute with orbit mutation");
      stack.push_back({std::move(next), std::move(path)});
    }
  }
  return r;
}

}  // namespace clusterlab
