#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's mutation code: matrices use a different form of the
// mutation rule and cluster variables are evaluated numerically through the
// exchange relation.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long pos(long long v) { return v > 0 ? v : 0; }

// b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2 away from row/column k.
inline Mat mutate(const Mat& b, std::size_t k) {
  Mat out = b;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      if (i == k || j == k)
        out[i][j] = -b[i][j];
      else
        out[i][j] = b[i][j] + (std::llabs(b[i][k]) * b[k][j] + b[i][k] * std::llabs(b[k][j])) / 2;
    }
  return out;
}

// Principal-coefficient seed evaluated at a fixed numeric point: x values are
// rationals, coefficients are tropical exponent vectors in y.
struct NumericSeed {
  std::vector<mpq_class> x;
  std::vector<std::vector<long long>> c;  // c[j] = exponents of y_j
  Mat b;
};

inline NumericSeed initial(const Mat& b, const std::vector<mpq_class>& x0) {
  const std::size_t n = b.size();
  NumericSeed s{x0, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)), b};
  for (std::size_t j = 0; j < n; ++j) s.c[j][j] = 1;
  return s;
}

inline mpq_class pow_q(const mpq_class& v, long long e) {
  mpq_class r = 1;
  for (long long i = 0; i < std::llabs(e); ++i) r *= v;
  return e >= 0 ? r : mpq_class(1 / r);
}

// Exchange relation x_k x'_k = y^[c_k]_+ prod x^[b]_+ + y^[-c_k]_+ prod x^[-b]_+
// (principal coefficients: y_k/(y_k (+) 1) and 1/(y_k (+) 1) tropically).
inline NumericSeed mutate(const NumericSeed& s, std::size_t k, const std::vector<mpq_class>& y) {
  const std::size_t n = s.b.size();
  NumericSeed t = s;
  mpq_class plus = 1, minus = 1;
  for (std::size_t i = 0; i < n; ++i) {
    plus *= pow_q(y[i], pos(s.c[k][i])) * pow_q(s.x[i], pos(s.b[i][k]));
    minus *= pow_q(y[i], pos(-s.c[k][i])) * pow_q(s.x[i], pos(-s.b[i][k]));
  }
  t.x[k] = (plus + minus) / s.x[k];
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) {
      for (auto& e : t.c[j]) e = -e;
      continue;
    }
    // y'_j = y_j y_k^[b_kj]_+ (y_k (+) 1)^{-b_kj}
    const long long bkj = s.b[k][j];
    for (std::size_t i = 0; i < n; ++i) {
      const long long ck = s.c[k][i];
      t.c[j][i] = s.c[j][i] + ck * pos(bkj) - std::min(ck, 0LL) * bkj;
    }
  }
  t.b = mutate(s.b, k);
  return t;
}

// Unlabeled seeds reachable from b, keyed by the sorted numeric cluster at a
// generic point. Returns {nodes, edges}.
inline std::pair<std::size_t, std::size_t> count_exchange_graph(const Mat& b, std::size_t cap = 1000) {
  const std::size_t n = b.size();
  std::vector<mpq_class> x0, y;
  for (std::size_t i = 0; i < n; ++i) {
    x0.emplace_back(mpq_class(2 * i + 3, 7 + i));
    y.emplace_back(mpq_class(5 + 2 * i, 3 + i));
  }
  auto key = [](const NumericSeed& s) {
    std::vector<mpq_class> v = s.x;
    std::sort(v.begin(), v.end());
    std::string out;
    for (auto& q : v) out += q.get_str() + ";";
    return out;
  };
  std::map<std::string, std::size_t> seen;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::vector<NumericSeed> queue{initial(b, x0)};
  seen[key(queue[0])] = 0;
  for (std::size_t head = 0; head < queue.size() && queue.size() < cap; ++head) {
    for (std::size_t k = 0; k < n; ++k) {
      NumericSeed t = mutate(queue[head], k, y);
      auto [it, fresh] = seen.emplace(key(t), queue.size());
      if (fresh) queue.push_back(t);
      edges.insert({std::min(head, it->second), std::max(head, it->second)});
    }
  }
  return {queue.size(), edges.size()};
}

}  // namespace oracle
