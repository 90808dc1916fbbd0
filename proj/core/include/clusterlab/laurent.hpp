#pragma once

#include "clusterlab/arith.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace clusterlab {

using Exponent = std::vector<int>;

/// Sparse multivariate Laurent polynomial with integer coefficients.
///
/// Terms are kept in a map keyed by exponent vector, so iteration order is
/// lexicographic on exponents; that order is also the canonical serialization.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars);
  LaurentPoly(std::shared_ptr<const std::vector<std::string>> vars, Terms terms);

  static LaurentPoly constant(std::shared_ptr<const std::vector<std::string>> vars, const Int& c);
  static LaurentPoly monomial(std::shared_ptr<const std::vector<std::string>> vars, Exponent e,
                              const Int& c = 1);
  static LaurentPoly variable(std::shared_ptr<const std::vector<std::string>> vars, std::size_t i);

  std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
  const std::vector<std::string>& vars() const;
  const std::shared_ptr<const std::vector<std::string>>& shared_vars() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of x^e (zero when absent).
  Int coefficient(const Exponent& e) const;
  /// Every exponent is non-negative.
  bool is_polynomial() const;
  bool all_coefficients_positive() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned e) const;
  /// Multiplies by the monomial c * x^e.
  LaurentPoly times_monomial(const Exponent& e, const Int& c = 1) const;

  /// Exact quotient in the Laurent ring, or nullopt when the divisor does not
  /// divide. Long division against the lexicographic leading term; candidate
  /// quotient exponents are confined to the Newton box, which bounds the loop.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Substitutes 1 for every variable whose mask entry is true; the returned
  /// polynomial is over the remaining variables.
  LaurentPoly set_to_one(const std::vector<bool>& mask) const;

  /// Lex-ordered "exp:coef" listing, stable across runs; used as a dedup key.
  std::string canonical_string() const;
  /// Human-readable form, e.g. "x1^-1*x2 + x1^-1*y1".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_ && a.nvars() == b.nvars();
  }

 private:
  void add_term(const Exponent& e, const Int& c);
  void check_compatible(const LaurentPoly& o) const;

  std::shared_ptr<const std::vector<std::string>> vars_;
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace clusterlab
