#pragma once

#include "clusterlab/arith.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace clusterlab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit IntMatrix(const std::vector<std::vector<Int>>& rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Bounds-checked access; throws IndexError.
  const Int& at(std::size_t r, std::size_t c) const;

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix operator-() const;

  /// Exact determinant (fraction-free Bareiss elimination).
  Int determinant() const;

  bool is_zero() const;
  std::vector<std::vector<Int>> to_rows() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      int r = cmp(a.data_[i], b.data_[i]);
      if (r != 0) return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Entrywise max(., 0).
IntMatrix bracket_plus(const IntMatrix& m);
/// Keeps row k only; every other row becomes zero.
IntMatrix row_trunc(const IntMatrix& m, std::size_t k);
/// Keeps column k only; every other column becomes zero.
IntMatrix col_trunc(const IntMatrix& m, std::size_t k);
/// Identity with the (k,k) entry replaced by -1.
IntMatrix j_matrix(std::size_t n, std::size_t k);

/// Sign of a sign-coherent nonzero vector: +1, -1; 0 if the vector is zero or
/// mixes signs.
int coherent_sign(const IntVector& v);

bool is_permutation_matrix(const IntMatrix& m);

/// Relabels rows and columns: result(i,j) = m(sigma[i], sigma[j]).
IntMatrix permute_square(const IntMatrix& m, const std::vector<std::size_t>& sigma);

}  // namespace clusterlab
