#ifndef DVB_LINALG_HPP
#define DVB_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dvb/errors.hpp"
#include "dvb/scalar.hpp"

namespace dvb {

/// Dense column vector over one scalar kind. Sizes here are tiny (<= a few
/// dozen entries), so everything is plain O(n^3)-or-less dense code.
template <typename S>
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : d_(n, S(0)) {}
  Vector(std::initializer_list<S> init) : d_(init) {}

  static Vector zero(std::size_t n) { return Vector(n); }
  static Vector unit(std::size_t n, std::size_t i) {
    Vector e(n);
    e[i] = S(1);
    return e;
  }

  std::size_t size() const { return d_.size(); }
  S& operator[](std::size_t i) { return d_[i]; }
  const S& operator[](std::size_t i) const { return d_[i]; }

  friend bool operator==(const Vector& a, const Vector& b) { return a.d_ == b.d_; }

  Vector& operator+=(const Vector& o) {
    require_same_size(o, "+");
    for (std::size_t i = 0; i < size(); ++i) d_[i] += o.d_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    require_same_size(o, "-");
    for (std::size_t i = 0; i < size(); ++i) d_[i] -= o.d_[i];
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }
  friend Vector operator*(const S& c, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
  }

  bool is_zero() const {
    for (const S& v : d_)
      if (!(v == S(0))) return false;
    return true;
  }

  double max_abs() const {
    double m = 0;
    for (const S& v : d_) m = std::max(m, std::abs(to_double(v)));
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ", ";
      s += scalar_to_string(d_[i]);
    }
    return s + "]";
  }

 private:
  void require_same_size(const Vector& o, const char* op) const {
    if (size() != o.size())
      throw Error(ErrorKind::DimMismatch, std::string("vector ") + op + " size " +
                                              std::to_string(size()) + " vs " +
                                              std::to_string(o.size()));
  }

  std::vector<S> d_;
};

template <typename S>
S dot(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimMismatch, "dot product of sizes " + std::to_string(a.size()) +
                                            " and " + std::to_string(b.size()));
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// Dense row-major matrix; columns act on column vectors from the left.
template <typename S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, S(0)) {}
  Matrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    d_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::InputError, "ragged matrix literal");
      for (const S& v : row) d_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = -a.d_[i];
    return r;
  }
  friend Matrix operator*(const S& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = c * a.d_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::DimMismatch, "matrix product " + a.shape_string() + " * " +
                                              b.shape_string());
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vector<S> operator*(const Matrix& a, const Vector<S>& x) {
    if (a.cols_ != x.size())
      throw Error(ErrorKind::DimMismatch,
                  "matrix-vector product " + a.shape_string() + " * [" + std::to_string(x.size()) + "]");
    Vector<S> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      S acc(0);
      for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j) * x[j];
      r[i] = acc;
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Vector<S> col(std::size_t j) const {
    Vector<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const S& v : d_)
      if (!(v == S(0))) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == (i == j ? S(1) : S(0)))) return false;
    return true;
  }

  double max_abs() const {
    double m = 0;
    for (const S& v : d_) m = std::max(m, std::abs(to_double(v)));
    return m;
  }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += scalar_to_string((*this)(i, j));
      }
    }
    return s + "]";
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::DimMismatch,
                  std::string("matrix ") + op + " " + shape_string() + " vs " + o.shape_string());
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> d_;
};

namespace detail {

// Gauss-Jordan on [a | rhs] with pivoting by largest magnitude. Exact over the
// rational kind (any nonzero pivot works); partial pivoting over floats.
template <typename S>
void gauss_jordan(Matrix<S>& a, Matrix<S>& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs_val(a(r, col)) > abs_val(a(piv, col))) piv = r;
    if (a(piv, col) == S(0)) throw Error(ErrorKind::Singular, "pivot vanished at column " + std::to_string(col));
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(piv, j), rhs(col, j));
    }
    const S inv_p = S(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) *= inv_p;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv_p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const S f = a(r, col);
      if (f == S(0)) continue;
      for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
}

} // namespace detail

template <typename S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimMismatch, "inverse of " + m.shape_string());
  Matrix<S> a = m;
  Matrix<S> rhs = Matrix<S>::identity(m.rows());
  detail::gauss_jordan(a, rhs);
  return rhs;
}

/// Solves a x = b for square a.
template <typename S>
Vector<S> solve(const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw Error(ErrorKind::DimMismatch, "solve " + a.shape_string() + ", rhs " + std::to_string(b.size()));
  Matrix<S> lhs = a;
  Matrix<S> rhs(a.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  detail::gauss_jordan(lhs, rhs);
  return rhs.col(0);
}

template <typename S>
S det(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimMismatch, "det of " + m.shape_string());
  Matrix<S> a = m;
  const std::size_t n = a.rows();
  S d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs_val(a(r, col)) > abs_val(a(piv, col))) piv = r;
    if (a(piv, col) == S(0)) return S(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    const S inv_p = S(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const S f = a(r, col) * inv_p;
      if (f == S(0)) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

/// Row-echelon rank. Exact over the rational kind; for floats, pivots below
/// 1e-12 times the largest entry count as zero.
template <typename S>
std::size_t rank(Matrix<S> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  double floor_mag = 0;
  if constexpr (!ScalarTraits<S>::exact) floor_mag = 1e-12 * std::max(1.0, a.max_abs());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (abs_val(a(i, c)) > abs_val(a(piv, c))) piv = i;
    if (a(piv, c) == S(0)) continue;
    if constexpr (!ScalarTraits<S>::exact) {
      if (std::abs(to_double(a(piv, c))) <= floor_mag) continue;
    }
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const S inv_p = S(1) / a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const S f = a(i, c) * inv_p;
      if (f == S(0)) continue;
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

template <typename S>
double max_abs_diff(const Vector<S>& a, const Vector<S>& b) {
  return (a - b).max_abs();
}
template <typename S>
double max_abs_diff(const Matrix<S>& a, const Matrix<S>& b) {
  return (a - b).max_abs();
}

template <typename S>
bool approx_eq(const Matrix<S>& a, const Matrix<S>& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}
template <typename S>
bool approx_eq(const Vector<S>& a, const Vector<S>& b, double tol) {
  return a.size() == b.size() && max_abs_diff(a, b) <= tol;
}

} // namespace dvb

#endif
