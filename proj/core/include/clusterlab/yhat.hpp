#pragma once

#include "clusterlab/rational_function.hpp"
#include "clusterlab/seed.hpp"

#include <optional>
#include <vector>

namespace clusterlab {

/// Outcome of comparing the two routes to the universal coefficients Y_{j,t}.
struct YHatReport {
  bool holds = true;
  /// First index j (0-based) where the routes disagree.
  std::optional<std::size_t> failing_index;
  /// Y_{j,t} by direct mutation in Q(Y_1..Y_n).
  std::vector<RationalFunction> direct;
  /// prod_i Y_i^{c_ij} * prod_i F_i(Y)^{b_ij}.
  std::vector<RationalFunction> separated;
};

/// Y_{j,t} obtained by mutating (Y_1..Y_n) along path in the universal
/// semifield, where the semifield sum is ordinary addition.
std::vector<RationalFunction> universal_coefficients(const ExchangeMatrix& b, const Path& path);

/// Compares the direct mutation with the product of the c-vector monomial and
/// F-polynomials raised to the entries of B_t. The right-hand side is built
/// from a principal-coefficient Laurent seed walked along the same path.
YHatReport yhat_identity_report(const ExchangeMatrix& b, const Path& path);

inline bool verify_yhat_identity(const ExchangeMatrix& b, const Path& path) {
  return yhat_identity_report(b, path).holds;
}

}  // namespace clusterlab
