#pragma once

// Dense complex vectors and matrices of dimension at most 3.
//
// Every operator in this library lives either on the three atomic levels or
// on one conserved-excitation block (dimension 1 or 3), so a fixed-capacity
// value type is enough and avoids heap traffic in the evolution kernels.

#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace lambdaphase {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr std::size_t kMaxDim = 3;

class SmallVector {
 public:
  SmallVector() = default;
  explicit SmallVector(std::size_t dim) : dim_(dim) { check_dim(dim); }
  SmallVector(std::initializer_list<Complex> values) : dim_(values.size()) {
    check_dim(dim_);
    std::size_t k = 0;
    for (const Complex& v : values) data_[k++] = v;
  }

  std::size_t dim() const { return dim_; }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  double squared_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += std::norm(data_[i]);
    return s;
  }

  static SmallVector basis(std::size_t dim, std::size_t k) {
    SmallVector v(dim);
    v[k] = 1.0;
    return v;
  }

 private:
  static void check_dim(std::size_t dim) {
    if (dim > kMaxDim) throw std::invalid_argument("SmallVector: dimension exceeds 3");
  }

  std::size_t dim_ = 0;
  std::array<Complex, kMaxDim> data_{};
};

/// Hermitian inner product <a|b> (conjugate-linear in the first argument).
inline Complex inner(const SmallVector& a, const SmallVector& b) {
  assert(a.dim() == b.dim());
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline SmallVector operator*(Complex s, const SmallVector& v) {
  SmallVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

inline SmallVector operator+(const SmallVector& a, const SmallVector& b) {
  assert(a.dim() == b.dim());
  SmallVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline SmallVector operator-(const SmallVector& a, const SmallVector& b) {
  assert(a.dim() == b.dim());
  SmallVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline double max_abs_diff(const SmallVector& a, const SmallVector& b) {
  assert(a.dim() == b.dim());
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

class SmallMatrix {
 public:
  SmallMatrix() = default;
  explicit SmallMatrix(std::size_t dim) : dim_(dim) {
    if (dim > kMaxDim) throw std::invalid_argument("SmallMatrix: dimension exceeds 3");
  }
  /// Row-major initializer; the number of rows fixes the dimension.
  SmallMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : SmallMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw std::invalid_argument("SmallMatrix: ragged initializer");
      std::size_t c = 0;
      for (const Complex& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static SmallMatrix identity(std::size_t dim) {
    SmallMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  /// |row><col|
  static SmallMatrix unit(std::size_t dim, std::size_t row, std::size_t col) {
    SmallMatrix m(dim);
    m(row, col) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * kMaxDim + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * kMaxDim + c]; }

  SmallMatrix adjoint() const {
    SmallMatrix a(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) a(c, r) = std::conj((*this)(r, c));
    return a;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry magnitude.
  double max_abs() const {
    double m = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) m = std::max(m, std::abs((*this)(r, c)));
    return m;
  }

  SmallVector column(std::size_t c) const {
    SmallVector v(dim_);
    for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const SmallVector& v) {
    assert(v.dim() == dim_);
    for (std::size_t r = 0; r < dim_; ++r) (*this)(r, c) = v[r];
  }

  bool operator==(const SmallMatrix& other) const {
    if (dim_ != other.dim_) return false;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if ((*this)(r, c) != other(r, c)) return false;
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

inline SmallMatrix operator+(const SmallMatrix& a, const SmallMatrix& b) {
  assert(a.dim() == b.dim());
  SmallMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

inline SmallMatrix operator-(const SmallMatrix& a, const SmallMatrix& b) {
  assert(a.dim() == b.dim());
  SmallMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

inline SmallMatrix operator*(Complex s, const SmallMatrix& a) {
  SmallMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
  return r;
}

inline SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
  assert(a.dim() == b.dim());
  SmallMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline SmallVector operator*(const SmallMatrix& a, const SmallVector& v) {
  assert(a.dim() == v.dim());
  SmallVector r(v.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

inline SmallMatrix commutator(const SmallMatrix& a, const SmallMatrix& b) { return a * b - b * a; }

inline double max_abs_diff(const SmallMatrix& a, const SmallMatrix& b) { return (a - b).max_abs(); }

/// |a><b|
inline SmallMatrix outer(const SmallVector& a, const SmallVector& b) {
  assert(a.dim() == b.dim());
  SmallMatrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

/// max |(U^H U - I)_{ij}|
inline double unitarity_defect(const SmallMatrix& u) {
  return max_abs_diff(u.adjoint() * u, SmallMatrix::identity(u.dim()));
}

inline double hermiticity_defect(const SmallMatrix& h) { return max_abs_diff(h, h.adjoint()); }

}  // namespace lambdaphase
