#pragma once

#include "clusterlab/laurent.hpp"

namespace clusterlab {

/// gcd of two integer polynomials (non-negative exponents) over the same
/// variables, normalized so the lexicographically leading coefficient is
/// positive. Recursive primitive PRS on the highest variable present.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Element of Q(v_1..v_m) kept as a reduced fraction of integer polynomials:
/// gcd(num, den) = 1 and the denominator's leading coefficient is positive.
class RationalFunction {
 public:
  RationalFunction() = default;
  /// Laurent input is allowed; negative exponents move into the denominator.
  explicit RationalFunction(const LaurentPoly& p);
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace clusterlab
