#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylphi/field.hpp"
#include "weylphi/partition.hpp"

namespace weylphi {

// Dense row-major matrix over a ring T. Vectors are std::vector<T>.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols = -1) {
    int c = rows.empty() ? (cols < 0 ? 0 : cols) : static_cast<int>(rows[0].size());
    Matrix m(static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.r_; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
  }
  static Matrix from_cols(const std::vector<std::vector<T>>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(a_.begin() + static_cast<long>(i) * c_,
                          a_.begin() + static_cast<long>(i + 1) * c_);
  }
  std::vector<T> col(int j) const {
    std::vector<T> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(int i, const std::vector<T>& v) {
    for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (x == T(0)) continue;
        for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }
  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(r_, T(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  Matrix transpose() const {
    Matrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<long long>;

template <class T>
Matrix<T> matrix_power(Matrix<T> m, long e) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  while (e > 0) {
    if (e & 1) r = r * m;
    m = m * m;
    e >>= 1;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<int> rref_inplace(Matrix<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != T(0)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref_inplace(m).size());
}

template <class T>
int rank_of_rows(const std::vector<std::vector<T>>& rows, int cols) {
  if (rows.empty()) return 0;
  return rank(Matrix<T>::from_rows(rows, cols));
}

// Basis of {x : m x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  Matrix<T> r = m;
  auto piv = rref_inplace(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  int n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref_inplace(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
Matrix<T> inverse_or_throw(const Matrix<T>& m) {
  auto r = inverse(m);
  if (!r) throw std::domain_error("matrix is singular");
  return *r;
}

// Coordinates of v in the row span of `basis` (rows independent), or nullopt.
template <class T>
std::optional<std::vector<T>> solve_in_rows(const Matrix<T>& basis, const std::vector<T>& v) {
  int k = basis.rows(), n = basis.cols();
  Matrix<T> aug(n, k + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug(i, j) = basis(j, i);
    aug(i, k) = v[i];
  }
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  std::vector<T> x(k, T(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(static_cast<int>(i), k);
  return x;
}

// Jordan type of a nilpotent matrix from the ranks of its powers.
template <class T>
Partition jordan_type_nilpotent(const Matrix<T>& nil) {
  int n = nil.rows();
  std::vector<int> ranks{n};
  Matrix<T> p = Matrix<T>::identity(n);
  while (ranks.back() > 0) {
    p = p * nil;
    int r = rank(p);
    if (r == ranks.back()) throw std::domain_error("jordan_type: matrix is not nilpotent");
    ranks.push_back(r);
  }
  // number of blocks of size >= k is rank(N^{k-1}) - rank(N^k)
  std::vector<int> at_least;
  for (size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  Partition out;
  for (size_t k = 0; k < at_least.size(); ++k) {
    int ge = at_least[k];
    int ge_next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < ge - ge_next; ++c) out.push_back(static_cast<int>(k + 1));
  }
  return sorted_desc(out);
}

template <class T>
Partition jordan_type_unipotent(const Matrix<T>& g) {
  return jordan_type_nilpotent(g - Matrix<T>::identity(g.rows()));
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += FieldTraits<T>::str(m(i, j));
    }
    s += "]\n";
  }
  return s;
}

}  // namespace weylphi
