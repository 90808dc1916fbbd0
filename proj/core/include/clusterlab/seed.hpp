#pragma once

#include "clusterlab/exchange_matrix.hpp"
#include "clusterlab/laurent.hpp"

#include <memory>
#include <string>
#include <vector>

namespace clusterlab {

/// Element of trop(z_1, ..., z_m): the exponent vector of a Laurent monomial.
/// Tropical sum is the componentwise minimum.
struct TropicalElement {
  IntVector exponents;

  static TropicalElement one(std::size_t m) { return {IntVector(m)}; }
  static TropicalElement generator(std::size_t m, std::size_t j);

  TropicalElement operator*(const TropicalElement& o) const;
  TropicalElement inverse() const;
  TropicalElement pow(const Int& e) const;
  /// Tropical addition: z^min(a, b).
  TropicalElement oplus(const TropicalElement& o) const;

  friend bool operator==(const TropicalElement&, const TropicalElement&) = default;
};

/// Shared, immutable data every seed of one pattern refers to.
struct SeedContext {
  std::size_t rank = 0;
  std::size_t generators = 0;
  bool principal = false;
  /// Exchange matrix at the initial vertex (drives the principal grading).
  IntMatrix initial_matrix;
  /// x_1..x_n followed by the tropical generators (y_i when principal).
  std::shared_ptr<const std::vector<std::string>> vars;
};

/// Labeled seed (x, y, B) with every cluster variable expanded as a Laurent
/// polynomial in the initial cluster, coefficients in a tropical semifield.
class Seed {
 public:
  Seed(std::shared_ptr<const SeedContext> ctx, std::vector<LaurentPoly> cluster,
       std::vector<TropicalElement> coeffs, ExchangeMatrix b);

  const SeedContext& context() const noexcept { return *ctx_; }
  const std::shared_ptr<const SeedContext>& shared_context() const noexcept { return ctx_; }
  std::size_t rank() const noexcept { return ctx_->rank; }
  const std::vector<LaurentPoly>& cluster() const noexcept { return cluster_; }
  const std::vector<TropicalElement>& coeffs() const noexcept { return coeffs_; }
  const ExchangeMatrix& exchange_matrix() const noexcept { return b_; }
  bool principal() const noexcept { return ctx_->principal; }

  /// Tropical exponents of y_1..y_n as columns: the C-matrix for principal seeds.
  IntMatrix coefficient_matrix() const;

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.cluster_ == b.cluster_ && a.coeffs_ == b.coeffs_ && a.b_ == b.b_;
  }

 private:
  std::shared_ptr<const SeedContext> ctx_;
  std::vector<LaurentPoly> cluster_;
  std::vector<TropicalElement> coeffs_;
  ExchangeMatrix b_;
};

/// Initial seed with principal coefficients trop(y_1..y_n).
Seed make_principal_seed(const ExchangeMatrix& b);

/// Initial seed over trop(z_1..z_m) with the supplied coefficient tuple.
Seed make_seed(const ExchangeMatrix& b, std::vector<TropicalElement> coeffs);

/// Seed mutation at k. The new x'_k is obtained by exact Laurent division;
/// a non-zero remainder raises ConsistencyError.
Seed mutate_seed(const Seed& s, std::size_t k);

Seed mutate_along(const Seed& s, const Path& path);

/// x_i with every x_j set to 1: a polynomial in y_1..y_n.
LaurentPoly f_polynomial(const Seed& s, std::size_t i);

/// Common degree of all terms of x_i under deg x_j = e_j, deg y_j = -b_j.
IntVector g_vector_from_grading(const Seed& s, std::size_t i);

/// G-matrix assembled column-by-column from the grading.
IntMatrix g_matrix_from_grading(const Seed& s);

/// F-polynomials, C- and G-matrices and the current exchange matrix, advanced
/// by the mutation recurrences alone (no Laurent expansion).
struct RecurrenceState {
  std::vector<LaurentPoly> f;
  IntMatrix c;
  IntMatrix g;
  IntMatrix b;
};

/// F = 1, C = G = I, B = B0; F lives in Z[y_1..y_n].
RecurrenceState initial_recurrence_state(const ExchangeMatrix& b0);

/// One edge t --k-- t' of the F/c/g recurrences. The F-recurrence uses the
/// positive parts y^[c]_+ and y^[-c]_+ so F stays a polynomial; the g update
/// reads the initial matrix b0 in its last sum.
RecurrenceState recurrence_step(const RecurrenceState& st, const IntMatrix& b0, std::size_t k);

/// Every coefficient of every cluster variable is strictly positive.
bool check_positivity(const Seed& s);

/// Coefficient of the zero exponent is exactly 1.
bool check_constant_term_one(const LaurentPoly& f);

}  // namespace clusterlab
