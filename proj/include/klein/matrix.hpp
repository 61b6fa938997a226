// Dense exact matrices: products, Bareiss determinant and rank, reduced row
// echelon form over fields, kernels, inverses, and division-free
// characteristic polynomials.

#ifndef KLEIN_MATRIX_HPP_
#define KLEIN_MATRIX_HPP_

#include "scalar.hpp"
#include "upoly.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klein {

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty())
      return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = conj((*this)(i, j));
    return t;
  }

  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
      throw std::out_of_range("matrix block");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Matrix hconcat(const Matrix& o) const {
    if (o.rows_ != rows_)
      throw std::invalid_argument("hconcat row mismatch");
    Matrix m(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j)
        m(i, cols_ + j) = o(i, j);
    }
    return m;
  }

  Matrix vconcat(const Matrix& o) const {
    if (rows_ == 0)
      return o;
    if (o.cols_ != cols_)
      throw std::invalid_argument("vconcat column mismatch");
    Matrix m = *this;
    m.rows_ += o.rows_;
    m.data_.insert(m.data_.end(), o.data_.begin(), o.data_.end());
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k)
      r.data_[k] = r.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k)
      r.data_[k] = r.data_[k] - b.data_[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (T& x : r.data_)
      x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j)))
            r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_)
      throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(v[j]))
          r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (T& x : r.data_)
      x = x * s;
    return r;
  }

  template <class D, class F>
  Matrix<D> map(F f) const {
    Matrix<D> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r(i, j) = f((*this)(i, j));
    return r;
  }

  bool is_zero_matrix() const {
    for (const T& x : data_)
      if (!is_zero(x))
        return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j)
          s += ", ";
        s += scalar_str((*this)(i, j));
      }
      s += "]\n";
    }
    return s;
  }

private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("matrix index");
  }
  void check_same_shape(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;
using CMatrix = Matrix<Cyclo>;

namespace impl {

// In-place fraction-free elimination over an integral domain.  Returns the
// rank; for square input of full rank, det = sign * m(n-1, n-1).
template <class T>
std::size_t bareiss(Matrix<T>& m, int& sign) {
  sign = 1;
  const std::size_t R = m.rows(), C = m.cols();
  T prev = T(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c)))
      ++p;
    if (p == R)
      continue;
    if (p != r) {
      for (std::size_t j = 0; j < C; ++j)
        std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j)
        m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      m(i, c) = T(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

inline Matrix<Integer> clear_row_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return z;
}

} // namespace impl

// Determinant over an integral domain by Bareiss elimination.
template <class T>
T det(Matrix<T> m) {
  if (!m.is_square())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return T(1);
  int sign;
  if (impl::bareiss(m, sign) < n)
    return T(0);
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Over Q: clear denominators row by row and run Bareiss over Z.
inline Rational det(const Matrix<Rational>& m) {
  if (!m.is_square())
    throw std::invalid_argument("determinant of non-square matrix");
  Rational scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    scale /= Rational(l);
  }
  return Rational(det(impl::clear_row_denominators(m))) * scale;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  int sign;
  return impl::bareiss(m, sign);
}

inline std::size_t rank(const Matrix<Rational>& m) {
  Matrix<Integer> z = impl::clear_row_denominators(m);
  int sign;
  return impl::bareiss(z, sign);
}

template <class T>
std::vector<std::size_t> rref(Matrix<T>& m);

// Cyclotomic division is costly, so eliminate with one inversion per pivot.
inline std::size_t rank(Matrix<Cyclo> m) { return rref(m).size(); }

// Reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c)))
      ++p;
    if (p == R)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j)
        std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < C; ++j)
      if (!is_zero(m(r, j)))
        m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || is_zero(m(i, c)))
        continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!is_zero(m(r, j)))
          m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Columns form a basis of {v : m v = 0}.
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
  Matrix<T> e = m;
  const std::vector<std::size_t> pivots = rref(e);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (std::size_t p : pivots)
    is_pivot[p] = true;
  Matrix<T> k(C, C - pivots.size());
  std::size_t col = 0;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f])
      continue;
    k(f, col) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], col) = -e(r, f);
    ++col;
  }
  return k;
}

// Basis of the row space (rows of the result), in echelon form.
template <class T>
Matrix<T> row_space(const Matrix<T>& m) {
  Matrix<T> e = m;
  const std::size_t r = rref(e).size();
  return e.block(0, 0, r, e.cols());
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square())
    throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug = m.hconcat(Matrix<T>::identity(n));
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    fail("matrix is singular");
  return aug.block(0, n, n, n);
}

// Solve m x = b for a square nonsingular m.
template <class T>
std::vector<T> solve(const Matrix<T>& m, const std::vector<T>& b) {
  const std::size_t n = m.rows();
  if (!m.is_square() || b.size() != n)
    throw std::invalid_argument("solve shape mismatch");
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    fail("matrix is singular");
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug(i, n);
  return x;
}

// Berkowitz algorithm; division-free.  Coefficients of det(T I - m), lowest
// degree first, leading coefficient 1.
template <class T>
std::vector<T> char_poly_coeffs(const Matrix<T>& m) {
  if (!m.is_square())
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // v holds the coefficients highest degree first.
  std::vector<T> v{T(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading k x k block A, column R = m(0..k-1, k), row S = m(k, 0..k-1).
    const T& akk = m(k, k);
    std::vector<T> col(k), tmp(k);
    for (std::size_t i = 0; i < k; ++i)
      col[i] = m(i, k);
    // Toeplitz column: 1, -akk, -S R, -S A R, -S A^2 R, ...
    std::vector<T> t(k + 2);
    t[0] = T(1);
    t[1] = -akk;
    for (std::size_t j = 2; j < k + 2; ++j) {
      T s = T(0);
      for (std::size_t i = 0; i < k; ++i)
        s = s + m(k, i) * col[i];
      t[j] = -s;
      for (std::size_t i = 0; i < k; ++i) {
        T acc = T(0);
        for (std::size_t l = 0; l < k; ++l)
          acc = acc + m(i, l) * col[l];
        tmp[i] = acc;
      }
      std::swap(col, tmp);
    }
    std::vector<T> w(k + 2, T(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j)
        w[i] = w[i] + t[i - j] * v[j];
    v = std::move(w);
  }
  std::vector<T> out(v.rbegin(), v.rend());
  return out;
}

template <class F>
UPoly<F> char_poly(const Matrix<F>& m) {
  return UPoly<F>(char_poly_coeffs(m));
}

// Trace of a square matrix.
template <class T>
T trace(const Matrix<T>& m) {
  if (!m.is_square())
    throw std::invalid_argument("trace of non-square matrix");
  T t = T(0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    t = t + m(i, i);
  return t;
}

// Leading principal minors 1..n.
template <class T>
std::vector<T> leading_minors(const Matrix<T>& m) {
  std::vector<T> out;
  for (std::size_t k = 1; k <= m.rows(); ++k)
    out.push_back(det(m.block(0, 0, k, k)));
  return out;
}

template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

} // namespace klein

#endif
