#include "clusterlab/exchange_matrix.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace clusterlab {

ExchangeMatrix::ExchangeMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("exchange matrix must be square");
  if (!is_sign_skew_symmetric(m_))
    throw PreconditionError("matrix is not sign-skew-symmetric: " + m_.to_string());
}

std::optional<ExchangeMatrix> ExchangeMatrix::try_make(IntMatrix m) {
  if (!m.is_square() || !is_sign_skew_symmetric(m)) return std::nullopt;
  return ExchangeMatrix(std::move(m), Unchecked{});
}

ExchangeMatrix ExchangeMatrix::mutate(std::size_t k) const {
  if (k >= rank()) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range");
  return ExchangeMatrix(mutate_matrix(m_, k));
}

ExchangeMatrix ExchangeMatrix::dual() const { return ExchangeMatrix(-m_.transpose(), Unchecked{}); }
ExchangeMatrix ExchangeMatrix::transpose() const { return ExchangeMatrix(m_.transpose(), Unchecked{}); }
ExchangeMatrix ExchangeMatrix::negate() const { return ExchangeMatrix(-m_, Unchecked{}); }

bool is_sign_skew_symmetric(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("sign-skew-symmetry needs a square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int a = sgn(m(i, j));
      const int b = sgn(m(j, i));
      if (a * b > 0) return false;
      if (a * b == 0 && (a != 0 || b != 0)) return false;
    }
  }
  return true;
}

bool is_acyclic(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  // Kahn's algorithm on arcs i -> j for b_ij > 0.
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) > 0) ++indeg[j];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    ++seen;
    for (std::size_t j = 0; j < n; ++j)
      if (b(v, j) > 0 && --indeg[j] == 0) ready.push_back(j);
  }
  return seen == n;
}

bool is_indecomposable(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && (b(v, j) != 0 || b(j, v) != 0)) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k) {
  if (k >= b.rows() || k >= b.cols())
    throw IndexError("mutation index " + std::to_string(k + 1) + " out of range");
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
        continue;
      }
      out(i, j) = b(i, j);
      const Int prod = b(i, k) * b(k, j);
      if (prod > 0) out(i, j) += sgn(b(i, k)) * prod;
    }
  }
  return out;
}

std::optional<IntVector> skew_symmetrizer(const IntMatrix& b) {
  if (!b.is_square()) throw DimensionError("skew-symmetrizer needs a square matrix");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (b(i, i) != 0) return std::nullopt;
  std::vector<std::optional<Rational>> d(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root]) continue;
    std::vector<std::size_t> component{root};
    d[root] = Rational(1);
    for (std::size_t head = 0; head < component.size(); ++head) {
      const auto i = component[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((b(i, j) == 0) != (b(j, i) == 0)) return std::nullopt;
        if (b(i, j) == 0) continue;
        // d_i b_ij = -d_j b_ji  =>  d_j = -d_i b_ij / b_ji
        Rational dj = -*d[i] * Rational(b(i, j)) / Rational(b(j, i));
        if (dj <= 0) return std::nullopt;
        if (!d[j]) {
          d[j] = dj;
          component.push_back(j);
        } else if (*d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Int lcm_den = 1;
    for (auto v : component) lcm_den = lcm(lcm_den, d[v]->get_den());
    Int g = 0;
    for (auto v : component) {
      d[v] = *d[v] * lcm_den;
      g = gcd(g, d[v]->get_num());
    }
    for (auto v : component) d[v] = Rational(d[v]->get_num() / g);
  }
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d[i]->get_num();
  return out;
}

SSSReport verify_totally_sss(const IntMatrix& b, std::size_t depth) {
  SSSReport report;
  if (!is_sign_skew_symmetric(b)) {
    report.failure_path = Path{};
    report.failing_matrix = b;
    report.nodes_checked = 1;
    return report;
  }
  struct Node {
    IntMatrix m;
    Path path;
  };
  std::vector<Node> level{{b, {}}};
  report.nodes_checked = 1;
  const std::size_t n = b.rows();
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Node> next;
    next.reserve(level.size() * (n > 0 ? n - 1 : 0) + n);
    for (const auto& node : level) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!node.path.empty() && node.path.back() == k) continue;
        Node child{mutate_matrix(node.m, k), node.path};
        child.path.push_back(k);
        ++report.nodes_checked;
        // Level order is lexicographic, so the first hit is the least path.
        if (!is_sign_skew_symmetric(child.m)) {
          report.verified_depth = d - 1;
          report.failure_path = std::move(child.path);
          report.failing_matrix = std::move(child.m);
          return report;
        }
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
    report.verified_depth = d;
  }
  return report;
}

IntMatrix principal_extension(const IntMatrix& b) {
  const std::size_t n = b.rows();
  IntMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = b(i, j);
    out(i, n + i) = -1;
    out(n + i, i) = 1;
  }
  return out;
}

}  // namespace clusterlab
