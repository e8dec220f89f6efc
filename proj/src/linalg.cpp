#include "homjmp/linalg.hpp"

#include <string>
#include <utility>

namespace homjmp {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  return r += b;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  return r -= b;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = s * v[i];
  return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector add");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i];
  return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector subtract");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  require_same(a.size(), b.size(), "axpy");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i].add_product(s, b[i]);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same(cols[c].size(), m.rows(), "from_columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::power(unsigned k) const {
  if (!is_square()) throw DimensionMismatch("power of non-square matrix");
  Matrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a.cols(), b.rows(), "matrix product");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) m(i, j).add_product(aik, b(k, j));
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same(a.rows(), b.rows(), "matrix add");
  require_same(a.cols(), b.cols(), "matrix add");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= s;
  return r;
}

Vector mat_apply(const Matrix& m, const Vector& v) {
  require_same(m.cols(), v.size(), "mat_apply");
  Vector r(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) r[i].add_product(m(i, j), v[j]);
  }
  return r;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
  }

  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix dual_transpose(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("dual_transpose of non-square matrix");
  return m.transpose();
}

// ---------------------------------------------------------------------------
// Tensors

Vector Tensor3::product_of_basis(std::size_t i, std::size_t j) const {
  Vector v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

bool Tensor3::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Tensor3::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if ((*this)(i, j, k) != (*this)(j, i, k)) return false;
  return true;
}

bool Tensor3::is_skew() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if ((*this)(i, j, k) != -(*this)(j, i, k)) return false;
  return true;
}

Vector Tensor4::product_of_basis(std::size_t i, std::size_t j, std::size_t k) const {
  Vector v(n_);
  for (std::size_t l = 0; l < n_; ++l) v[l] = (*this)(i, j, k, l);
  return v;
}

bool Tensor4::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Vector apply_product(const Tensor3& c, const Vector& u, const Vector& v) {
  const std::size_t n = c.dim();
  require_same(u.size(), n, "apply_product left operand");
  require_same(v.size(), n, "apply_product right operand");
  Vector r(n);
  Scalar uv;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) r[k].add_product(uv, c(i, j, k));
    }
  }
  return r;
}

Vector apply_triple(const Tensor4& t, const Vector& u, const Vector& v, const Vector& w) {
  const std::size_t n = t.dim();
  require_same(u.size(), n, "apply_triple first operand");
  require_same(v.size(), n, "apply_triple second operand");
  require_same(w.size(), n, "apply_triple third operand");
  Vector r(n);
  Scalar uv, uvw;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (w[k].is_zero()) continue;
        uvw = uv * w[k];
        for (std::size_t l = 0; l < n; ++l)
          if (!t(i, j, k, l).is_zero()) r[l].add_product(uvw, t(i, j, k, l));
      }
    }
  }
  return r;
}

Tensor3 compose_left(const Matrix& m, const Tensor3& c) {
  const std::size_t n = c.dim();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("compose_left: map and tensor dims differ");
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector img = mat_apply(m, c.product_of_basis(i, j));
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = img[k];
    }
  return r;
}

Tensor3 conjugate_inputs(const Tensor3& c, const Matrix& m) {
  const std::size_t n = c.dim();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("conjugate_inputs: map and tensor dims differ");
  Tensor3 r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector img = apply_product(c, m.column(i), m.column(j));
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) = img[k];
    }
  return r;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  require_same(a.dim(), b.dim(), "tensor add");
  const std::size_t n = a.dim();
  Tensor3 r = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) += b(i, j, k);
  return r;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) { return a + Scalar(-1) * b; }

Tensor3 operator*(const Scalar& s, const Tensor3& c) {
  const std::size_t n = c.dim();
  Tensor3 r = c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r(i, j, k) *= s;
  return r;
}

}  // namespace homjmp
