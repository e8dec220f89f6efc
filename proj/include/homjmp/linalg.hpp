#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homjmp/scalar.hpp"

namespace homjmp {

/// Coordinates in the fixed basis e_0..e_{n-1}.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);

/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> d);
  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix transpose() const;
  Matrix power(unsigned k) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);

/// Matrix-vector product m * v.
Vector mat_apply(const Matrix& m, const Vector& v);

/// Exact rank by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing row denominators.
std::size_t rank(const Matrix& m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column of the
/// reduced row echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Matrix of f -> f o m on coordinate rows in the dual basis.
Matrix dual_transpose(const Matrix& m);

/// Structure constants of a bilinear product: e_i * e_j = sum_k c(i,j,k) e_k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  /// e_i * e_j as a vector.
  Vector product_of_basis(std::size_t i, std::size_t j) const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

/// Ternary bracket: {e_i, e_j, e_k} = sum_l t(i,j,k,l) e_l.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  Vector product_of_basis(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const;

  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

/// sum_ij u_i v_j c(i,j,.)
Vector apply_product(const Tensor3& c, const Vector& u, const Vector& v);
/// sum_ijk u_i v_j w_k t(i,j,k,.)
Vector apply_triple(const Tensor4& t, const Vector& u, const Vector& v, const Vector& w);

/// Tensor of the product (x, y) -> m(c(x, y)).
Tensor3 compose_left(const Matrix& m, const Tensor3& c);
/// Tensor of the product (x, y) -> c(m x, m y).
Tensor3 conjugate_inputs(const Tensor3& c, const Matrix& m);
Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a, const Tensor3& b);
Tensor3 operator*(const Scalar& s, const Tensor3& c);

}  // namespace homjmp
