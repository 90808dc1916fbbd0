#include "clusterlab/gfan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <thread>

namespace clusterlab {

namespace {

RationalVector to_rational(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

// Inverse over Q by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = m(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * 2 * n + c]; };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && at(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
    const Rational p = at(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) at(col, c) /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      const Rational f = at(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = at(i, n + j);
  return inv;
}

IntVector primitive(IntVector v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Integer row scaled from a rational row (clears denominators).
IntVector clear_denominators(const std::vector<Rational>& row) {
  Int l = 1;
  for (const auto& q : row) l = lcm(l, q.get_den());
  IntVector out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = Rational(row[i] * l).get_num();
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Generalized cross product of n-1 vectors in Z^n: the cofactor vector.
IntVector cofactor_normal(const std::vector<IntVector>& rows, std::size_t n) {
  IntVector r(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(rows.size(), rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(a, cc++) = rows[a][c];
      }
    }
    Int d = minor.determinant();
    r[j] = (j % 2 == 0) ? d : Int(-d);
  }
  return r;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> sign_vector(const RationalVector& v) {
  std::vector<int> s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = sgn(v[i]);
  return s;
}

}  // namespace

SimplicialCone::SimplicialCone(IntMatrix g, Path origin) : g_(std::move(g)), origin_(std::move(origin)) {
  if (!g_.is_square()) throw DimensionError("cone generator matrix must be square");
  auto inv = rational_inverse(g_);
  if (!inv) throw PreconditionError("cone generators are linearly dependent: " + g_.to_string());
  inverse_ = std::move(*inv);
}

RationalVector SimplicialCone::coordinates(const RationalVector& v) const {
  const std::size_t n = dim();
  if (v.size() != n) throw DimensionError("vector length does not match cone dimension");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += inverse_[i * n + j] * v[j];
  return x;
}

bool SimplicialCone::contains(const RationalVector& v) const {
  auto x = coordinates(v);
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q >= 0; });
}

bool SimplicialCone::contains(const IntVector& v) const { return contains(to_rational(v)); }

bool SimplicialCone::contains_in_interior(const RationalVector& v) const {
  auto x = coordinates(v);
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q > 0; });
}

std::vector<IntVector> SimplicialCone::sorted_generators() const {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < dim(); ++i) gens.push_back(generator(i));
  std::sort(gens.begin(), gens.end());
  return gens;
}

SimplicialCone cone_of(const IntMatrix& g, Path origin) {
  if (!g.is_square()) throw DimensionError("G-matrix must be square");
  const Int d = g.determinant();
  if (d != 1 && d != -1)
    throw PreconditionError("G-cone needs a unimodular matrix, det = " + d.get_str());
  return SimplicialCone(g, std::move(origin));
}

std::vector<IntVector> intersection_rays(const SimplicialCone& a, const SimplicialCone& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw DimensionError("cones of different dimension");
  // Facet inequalities h . v >= 0: rows of the inverses.
  std::vector<IntVector> ineq;
  for (const SimplicialCone* c : {&a, &b}) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n);
      e[i] = 1;
      // Row i of G^{-1} is the functional v -> x_i(v).
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) {
        RationalVector unit(n);
        unit[j] = 1;
        row[j] = c->coordinates(unit)[i];
      }
      ineq.push_back(clear_denominators(row));
    }
  }
  std::set<IntVector> rays;
  const std::size_t m = ineq.size();
  for_each_subset(m, n - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> rows;
    for (auto s : subset) rows.push_back(ineq[s]);
    IntVector r = cofactor_normal(rows, n);
    if (std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; })) return;
    for (int flip = 0; flip < 2; ++flip) {
      if (flip)
        for (auto& v : r) v = -v;
      if (std::all_of(ineq.begin(), ineq.end(), [&](const IntVector& h) { return dot(h, r) >= 0; })) {
        rays.insert(primitive(r));
        break;
      }
    }
  });
  return {rays.begin(), rays.end()};
}

bool intersection_is_face_of(const SimplicialCone& a, const std::vector<IntVector>& rays) {
  for (const auto& r : rays) {
    auto x = a.coordinates(to_rational(r));
    std::size_t nonzero = 0;
    for (const auto& q : x) {
      if (q < 0) return false;
      if (q > 0) ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

FanReport check_fan(const std::vector<SimplicialCone>& cones, unsigned threads) {
  FanReport report;
  report.cone_count = cones.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) pairs.emplace_back(i, j);

  threads = std::max(1u, threads);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> failures(threads);
  auto worker = [&](unsigned w) {
    for (std::size_t p = w; p < pairs.size(); p += threads) {
      const auto [i, j] = pairs[p];
      const auto rays = intersection_rays(cones[i], cones[j]);
      if (!intersection_is_face_of(cones[i], rays) || !intersection_is_face_of(cones[j], rays))
        failures[w].push_back(pairs[p]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures)
    report.face_check_failures.insert(report.face_check_failures.end(), f.begin(), f.end());
  std::sort(report.face_check_failures.begin(), report.face_check_failures.end());
  return report;
}

void check_coverage(const std::vector<SimplicialCone>& cones, std::size_t samples, std::uint64_t seed,
                    FanReport& report) {
  if (cones.empty()) return;
  const std::size_t n = cones.front().dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  report.points_sampled = 0;
  report.points_uncovered = 0;
  report.points_multiply_covered = 0;
  while (report.points_sampled < samples) {
    RationalVector p(n);
    bool zero = true;
    for (auto& q : p) {
      q = Rational(num(rng), den(rng));
      q.canonicalize();
      zero = zero && q == 0;
    }
    if (zero) continue;
    ++report.points_sampled;
    std::size_t closed = 0, interior = 0;
    for (const auto& c : cones) {
      auto x = c.coordinates(p);
      if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q >= 0; })) {
        ++closed;
        if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q > 0; })) ++interior;
      }
    }
    if (closed == 0) ++report.points_uncovered;
    // Boundary points legitimately sit in several closed cones.
    if (interior > 0 && closed > 1) ++report.points_multiply_covered;
  }
  report.complete = report.points_uncovered == 0 && report.points_multiply_covered == 0;
}

GFan enumerate_gfan(const ExchangeMatrix& b0, std::size_t depth) {
  GFan fan;
  fan.depth = depth;
  std::set<std::vector<IntVector>> seen;
  std::deque<std::pair<PatternNode, std::size_t>> queue;
  auto root = PatternNode::initial(b0);
  fan.cones.push_back(cone_of(root.g, root.path));
  seen.insert(fan.cones.back().sorted_generators());
  queue.emplace_back(std::move(root), 0);
  bool truncated = false;
  while (!queue.empty()) {
    auto [node, d] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < b0.rank(); ++k) {
      PatternNode next = step(node, k);
      SimplicialCone cone = cone_of(next.g, next.path);
      auto key = cone.sorted_generators();
      if (seen.count(key)) continue;
      if (d == depth) {
        truncated = true;
        continue;
      }
      seen.insert(std::move(key));
      fan.cones.push_back(std::move(cone));
      queue.emplace_back(std::move(next), d + 1);
    }
  }
  fan.closed = !truncated;
  return fan;
}

RationalVector eta_map(const IntMatrix& b0, std::size_t k, const RationalVector& w) {
  const std::size_t n = b0.rows();
  if (k >= n) throw IndexError("eta direction out of range");
  if (w.size() != n) throw DimensionError("eta argument length mismatch");
  RationalVector out = w;
  const int side = w[k] >= 0 ? 1 : -1;
  out[k] = -w[k];
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    const Int coeff = positive_part(side > 0 ? b0(i, k) : Int(-b0(i, k)));
    if (coeff != 0) out[i] += Rational(coeff) * w[k];
  }
  return out;
}

IntVector eta_map(const IntMatrix& b0, std::size_t k, const IntVector& w) {
  auto r = eta_map(b0, k, to_rational(w));
  IntVector out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].get_num();
  return out;
}

bool eta_inverse_check(const IntMatrix& b0, std::size_t k, const RationalVector& w) {
  const IntMatrix b1 = mutate_matrix(b0, k);
  return eta_map(b1, k, eta_map(b0, k, w)) == w;
}

RationalVector eta_along(const IntMatrix& b0, const Path& path, const RationalVector& w) {
  IntMatrix b = b0;
  RationalVector v = w;
  for (auto k : path) {
    v = eta_map(b, k, v);
    b = mutate_matrix(b, k);
  }
  return v;
}

bool sign_equivalent(const ExchangeMatrix& b, const RationalVector& w, const RationalVector& w2,
                     std::size_t depth) {
  const std::size_t n = b.rank();
  struct Frame {
    IntMatrix m;
    RationalVector u, v;
    std::size_t last;
    std::size_t d;
  };
  std::vector<Frame> stack{{b.matrix(), w, w2, n, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (sign_vector(f.u) != sign_vector(f.v)) return false;
    if (f.d == depth) continue;
    for (std::size_t k = n; k-- > 0;) {
      if (k == f.last) continue;
      stack.push_back({mutate_matrix(f.m, k), eta_map(f.m, k, f.u), eta_map(f.m, k, f.v), k, f.d + 1});
    }
  }
  return true;
}

std::size_t transitively_adjacent_count(const std::vector<SimplicialCone>& cones) {
  if (cones.empty()) return 0;
  const std::size_t n = cones.front().dim();
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].sorted_generators() == cone_of(IntMatrix::identity(n)).sorted_generators()) start = i;
  if (!start) return 0;

  auto adjacent = [&](const SimplicialCone& a, const SimplicialCone& b) {
    auto ga = a.sorted_generators();
    auto gb = b.sorted_generators();
    std::vector<IntVector> shared;
    std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(shared));
    if (shared.size() + 1 != n) return false;
    auto other = [&](const std::vector<IntVector>& g) {
      for (const auto& v : g)
        if (!std::binary_search(shared.begin(), shared.end(), v)) return v;
      return IntVector{};
    };
    const IntVector normal = cofactor_normal(shared, n);
    // Disjoint interiors: the opposite vertices lie strictly on opposite sides.
    return sgn(dot(normal, other(ga))) * sgn(dot(normal, other(gb))) < 0;
  };

  std::vector<bool> reached(cones.size(), false);
  std::deque<std::size_t> queue{*start};
  reached[*start] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < cones.size(); ++j) {
      if (reached[j] || !adjacent(cones[i], cones[j])) continue;
      reached[j] = true;
      ++count;
      queue.push_back(j);
    }
  }
  return count;
}

CheckResult check_eta_on_gcones(const ExchangeMatrix& b0, std::size_t depth) {
  CheckResult r;
  r.name = "eta_gcones";
  r.verified_depth = depth;
  const std::size_t n = b0.rank();
  std::vector<ExchangeMatrix> neighbours;
  for (std::size_t k = 0; k < n; ++k) neighbours.push_back(b0.mutate(k));
  try {
    r.explored = walk_pattern(b0, depth, [&](const PatternNode& t) {
      for (std::size_t k = 0; k < n; ++k) {
        const int side = coherent_sign(t.g.row(k));
        if (side == 0) {
          r = CheckResult::failure(r.name, t.path, "G-cone straddles the hyperplane w_" + std::to_string(k + 1));
          return false;
        }
        Path from_t1{k};
        from_t1.insert(from_t1.end(), t.path.begin(), t.path.end());
        const PatternNode re = walk_to(neighbours[k], reduce_path(from_t1));
        for (std::size_t i = 0; i < n; ++i) {
          if (eta_map(b0.matrix(), k, t.g.column(i)) != re.g.column(i)) {
            r = CheckResult::failure(r.name, t.path,
                                     "eta at direction " + std::to_string(k + 1) + " misses g-vector " +
                                         std::to_string(i + 1));
            return false;
          }
        }
      }
      return true;
    });
  } catch (const SignUndefinedError& e) {
    r = CheckResult::failure(r.name, e.path(), e.what());
  }
  return r;
}

CheckResult check_nonnegative_gvectors(const ExchangeMatrix& b0, std::size_t depth) {
  CheckResult r;
  r.name = "nonnegative_gvectors";
  r.verified_depth = depth;
  try {
    r.explored = walk_pattern(b0, depth, [&](const PatternNode& t) {
      for (std::size_t i = 0; i < t.g.cols(); ++i) {
        const IntVector g = t.g.column(i);
        if (std::any_of(g.begin(), g.end(), [](const Int& v) { return v < 0; })) continue;
        Int sum = 0;
        for (const auto& v : g) sum += v;
        if (sum != 1) {
          r = CheckResult::failure(r.name, t.path,
                                   "non-negative g-vector " + std::to_string(i + 1) + " is not a basis vector");
          return false;
        }
      }
      return true;
    });
  } catch (const SignUndefinedError& e) {
    r = CheckResult::failure(r.name, e.path(), e.what());
  }
  return r;
}

}  // namespace clusterlab
