#include "clusterlab/int_matrix.hpp"

#include <sstream>

namespace clusterlab {

std::string format_path(const Path& path) {
  std::string out = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(path[i] + 1);
  }
  return out + ")";
}

Path extend_reduced(Path path, std::size_t k) {
  if (!path.empty() && path.back() == k)
    path.pop_back();
  else
    path.push_back(k);
  return path;
}

Path reduce_path(const Path& path) {
  Path out;
  for (auto k : path) out = extend_reduced(std::move(out), k);
  return out;
}

std::vector<Path> reduced_paths(std::size_t n, std::size_t depth) {
  std::vector<Path> out;
  std::vector<Path> stack{{}};
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    if (p.size() < depth)
      for (std::size_t k = n; k-- > 0;) {
        if (!p.empty() && p.back() == k) continue;
        Path q = p;
        q.push_back(k);
        stack.push_back(std::move(q));
      }
    out.push_back(std::move(p));
  }
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw IndexError("matrix index (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                     ") out of range");
  return (*this)(r, c);
}

IntVector IntMatrix::row(std::size_t r) const {
  if (r >= rows_) throw IndexError("row index out of range");
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  if (c >= cols_) throw IndexError("column index out of range");
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const IntVector& v) {
  if (c >= cols_) throw IndexError("column index out of range");
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      flip = -flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return flip * a(n - 1, n - 1);
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = row(r);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c) + b(r, c);
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += a(r, k) * b(k, c);
    }
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

IntMatrix bracket_plus(const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (out(r, c) < 0) out(r, c) = 0;
  return out;
}

IntMatrix row_trunc(const IntMatrix& m, std::size_t k) {
  if (k >= m.rows()) throw IndexError("row_trunc index out of range");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out(k, c) = m(k, c);
  return out;
}

IntMatrix col_trunc(const IntMatrix& m, std::size_t k) {
  if (k >= m.cols()) throw IndexError("col_trunc index out of range");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, k);
  return out;
}

IntMatrix j_matrix(std::size_t n, std::size_t k) {
  if (k >= n) throw IndexError("j_matrix index out of range");
  IntMatrix m = IntMatrix::identity(n);
  m(k, k) = -1;
  return m;
}

int coherent_sign(const IntVector& v) {
  bool pos = false, neg = false;
  for (const auto& x : v) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos == neg) return 0;
  return pos ? 1 : -1;
}

bool is_permutation_matrix(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int ones = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 1)
        ++ones;
      else if (m(r, c) != 0)
        return false;
    }
    if (ones != 1) return false;
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    int ones = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) ones += m(r, c) == 1;
    if (ones != 1) return false;
  }
  return true;
}

IntMatrix permute_square(const IntMatrix& m, const std::vector<std::size_t>& sigma) {
  if (!m.is_square() || sigma.size() != m.rows()) throw DimensionError("permutation size mismatch");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(sigma[i], sigma[j]);
  return out;
}

}  // namespace clusterlab
