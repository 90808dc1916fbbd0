#pragma once

#include "clusterlab/report.hpp"
#include "clusterlab/seed.hpp"

namespace clusterlab {

/// Walks the principal-coefficient seed pattern to depth with Laurent
/// expansions, the F/c/g recurrences and the matrix pattern side by side.
/// At every node and index: F has constant term 1, every Laurent expansion has
/// positive coefficients, the grading g-vector equals the recurrence and
/// pattern g-vectors, and tropical y-exponents equal the recurrence and
/// pattern c-vectors; F from the seed equals the recurrence F.
CheckResult check_seed_walk(const ExchangeMatrix& b0, std::size_t depth);

/// The y-hat identity on every reduced path up to depth.
CheckResult check_yhat_walk(const ExchangeMatrix& b0, std::size_t depth);

}  // namespace clusterlab
