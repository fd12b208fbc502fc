#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "radon/rational.hpp"

namespace radon {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, ScalarOps<T>::zero()) {}
  Matrix(size_t rows, size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), a_(std::move(data)) {
    if (a_.size() != rows * cols) throw DimensionError("matrix data length mismatch");
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = ScalarOps<T>::one();
    return m;
  }
  static Matrix scalar(size_t n, const T& s) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<T>& data() const { return a_; }

  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const {
    same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
  }
  Matrix operator-() const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
    return out;
  }
  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& aik = a_[i * cols_ + k];
        if (ScalarOps<T>::is_zero(aik)) continue;
        for (size_t j = 0; j < o.cols_; ++j) out.a_[i * o.cols_ + j] += aik * o.a_[k * o.cols_ + j];
      }
    return out;
  }
  Matrix scaled(const T& s) const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
    return out;
  }
  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }
  T trace() const {
    if (!square()) throw DimensionError("trace of non-square matrix");
    T t = ScalarOps<T>::zero();
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!ScalarOps<T>::is_zero(x)) return false;
    return true;
  }
  bool is_identity() const { return square() && *this == identity(rows_); }

  Matrix sub(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("submatrix out of range");
    Matrix out(nr, nc);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  void set_sub(size_t r0, size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionError("submatrix out of range");
    for (size_t i = 0; i < m.rows_; ++i)
      for (size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }

  // (a_ij) -> (a_ij * 1_b)
  Matrix kron_identity(size_t b) const {
    Matrix out(rows_ * b, cols_ * b);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!ScalarOps<T>::is_zero((*this)(i, j)))
          for (size_t t = 0; t < b; ++t) out(i * b + t, j * b + t) = (*this)(i, j);
    return out;
  }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using ExactMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<Complex>;

// r x r block grid over a matrix
template <class T>
class BlockView {
 public:
  BlockView(Matrix<T>& base, size_t r) : base_(&base), r_(r) {
    if (r == 0 || base.rows() % r != 0 || base.cols() % r != 0)
      throw DimensionError("matrix dimensions not a multiple of block size");
  }
  size_t block_rows() const { return base_->rows() / r_; }
  size_t block_cols() const { return base_->cols() / r_; }
  size_t r() const { return r_; }
  Matrix<T> get(size_t i, size_t j) const { return base_->sub(i * r_, j * r_, r_, r_); }
  void set(size_t i, size_t j, const Matrix<T>& b) {
    if (b.rows() != r_ || b.cols() != r_) throw DimensionError("block size mismatch");
    base_->set_sub(i * r_, j * r_, b);
  }

 private:
  Matrix<T>* base_;
  size_t r_;
};

template <class T>
Matrix<T> block_get(const Matrix<T>& m, size_t r, size_t i, size_t j) {
  return m.sub(i * r, j * r, r, r);
}

// Fraction-free elimination on the integer-scaled matrix.
Rational det(const ExactMatrix& a);
ExactMatrix inverse(const ExactMatrix& a);
// Partial pivoting.
Complex det(const ComplexMatrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);

// basis of {v : a v = 0}, exact
std::vector<ExactMatrix> nullspace(const ExactMatrix& a);
size_t rank(const ExactMatrix& a);

ComplexMatrix to_complex(const ExactMatrix& a);

// square matrix power for small exponents
template <class T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned k) {
  Matrix<T> out = Matrix<T>::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace radon
