#include "clusterlab/yhat.hpp"

namespace clusterlab {

namespace {

std::shared_ptr<const std::vector<std::string>> y_vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i + 1));
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

long small(const Int& v) {
  if (!v.fits_slong_p()) throw ConsistencyError("exponent exceeds machine range");
  return v.get_si();
}

}  // namespace

std::vector<RationalFunction> universal_coefficients(const ExchangeMatrix& b0, const Path& path) {
  const std::size_t n = b0.rank();
  auto vars = y_vars(n);
  std::vector<RationalFunction> y;
  for (std::size_t i = 0; i < n; ++i) y.emplace_back(LaurentPoly::variable(vars, i));
  const RationalFunction one(LaurentPoly::constant(vars, 1));
  IntMatrix b = b0.matrix();
  for (auto k : path) {
    if (k >= n) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range");
    const RationalFunction yk = y[k];
    const RationalFunction yk_plus_1 = yk + one;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      const Int& bkj = b(k, j);
      y[j] = y[j] * yk.pow(small(positive_part(bkj))) * yk_plus_1.pow(-small(bkj));
    }
    y[k] = yk.inverse();
    b = mutate_matrix(b, k);
  }
  return y;
}

YHatReport yhat_identity_report(const ExchangeMatrix& b0, const Path& path) {
  const std::size_t n = b0.rank();
  YHatReport report;
  report.direct = universal_coefficients(b0, path);

  const Seed seed = mutate_along(make_principal_seed(b0), path);
  const IntMatrix c = seed.coefficient_matrix();
  const IntMatrix& bt = seed.exchange_matrix().matrix();
  auto vars = y_vars(n);

  std::vector<RationalFunction> f;
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly fi = f_polynomial(seed, i);
    // Same exponent layout; only the variable names change.
    f.emplace_back(LaurentPoly(vars, fi.terms()));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Exponent mono(n, 0);
    for (std::size_t i = 0; i < n; ++i) mono[i] = static_cast<int>(small(c(i, j)));
    RationalFunction rhs(LaurentPoly::monomial(vars, mono));
    for (std::size_t i = 0; i < n; ++i)
      if (bt(i, j) != 0) rhs = rhs * f[i].pow(small(bt(i, j)));
    report.separated.push_back(std::move(rhs));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!(report.direct[j] == report.separated[j])) {
      report.holds = false;
      report.failing_index = j;
      break;
    }
  }
  return report;
}

}  // namespace clusterlab
