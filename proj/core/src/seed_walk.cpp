#include "clusterlab/seed_walk.hpp"

#include "clusterlab/pattern.hpp"
#include "clusterlab/yhat.hpp"

namespace clusterlab {

namespace {

struct WalkFrame {
  Seed seed;
  RecurrenceState rec;
  PatternNode pattern;
};

std::string compare_node(const WalkFrame& f, const IntMatrix& b0) {
  const std::size_t n = b0.rows();
  if (!check_positivity(f.seed)) return "Laurent expansion with a non-positive coefficient";
  const IntMatrix g = g_matrix_from_grading(f.seed);
  const IntMatrix c = f.seed.coefficient_matrix();
  if (g != f.rec.g) return "grading g-vectors differ from the recurrence";
  if (g != f.pattern.g) return "grading g-vectors differ from the matrix pattern";
  if (c != f.rec.c) return "tropical y-exponents differ from the recurrence c-vectors";
  if (c != f.pattern.c) return "tropical y-exponents differ from the matrix pattern";
  if (f.seed.exchange_matrix().matrix() != f.rec.b) return "exchange matrices differ";
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly fp = f_polynomial(f.seed, i);
    if (!check_constant_term_one(fp)) return "F-polynomial " + std::to_string(i + 1) + " has constant term != 1";
    if (fp.terms() != f.rec.f[i].terms()) return "F-polynomial " + std::to_string(i + 1) + " differs from the recurrence";
  }
  return {};
}

}  // namespace

CheckResult check_seed_walk(const ExchangeMatrix& b0, std::size_t depth) {
  CheckResult r;
  r.name = "seed_walk";
  r.verified_depth = depth;
  const std::size_t n = b0.rank();
  try {
    std::vector<WalkFrame> stack{{make_principal_seed(b0), initial_recurrence_state(b0), PatternNode::initial(b0)}};
    while (!stack.empty()) {
      WalkFrame f = std::move(stack.back());
      stack.pop_back();
      ++r.explored;
      if (auto msg = compare_node(f, b0.matrix()); !msg.empty())
        return CheckResult::failure(r.name, f.pattern.path, msg);
      if (f.pattern.path.size() == depth) continue;
      for (std::size_t k = n; k-- > 0;) {
        if (!f.pattern.path.empty() && f.pattern.path.back() == k) continue;
        stack.push_back({mutate_seed(f.seed, k), recurrence_step(f.rec, b0.matrix(), k), step(f.pattern, k)});
      }
    }
  } catch (const SignUndefinedError& e) {
    return CheckResult::failure(r.name, e.path(), e.what());
  }
  return r;
}

CheckResult check_yhat_walk(const ExchangeMatrix& b0, std::size_t depth) {
  CheckResult r;
  r.name = "yhat";
  r.verified_depth = depth;
  for (const auto& path : reduced_paths(b0.rank(), depth)) {
    ++r.explored;
    const auto rep = yhat_identity_report(b0, path);
    if (!rep.holds)
      return CheckResult::failure(r.name, path,
                                  "identity fails for Y_" + std::to_string(rep.failing_index.value_or(0) + 1));
  }
  return r;
}

}  // namespace clusterlab
