#include "homjmp/algebra.hpp"

#include <string>

namespace homjmp {

namespace {

void check_vec(const HomAlgebra& a, const Vector& v) {
  if (v.size() != a.dim())
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " for algebra of dim " +
                            std::to_string(a.dim()));
}

}  // namespace

HomAlgebra::HomAlgebra(Tensor3 m, Matrix t) : mul(std::move(m)), twist(std::move(t)) {
  if (twist.rows() != mul.dim() || twist.cols() != mul.dim())
    throw DimensionMismatch("twist must be " + std::to_string(mul.dim()) + "x" + std::to_string(mul.dim()));
}

HomAlgebra HomAlgebra::zero(std::size_t n) { return {Tensor3(n), Matrix::identity(n)}; }

HomJMPAlgebra::HomJMPAlgebra(Tensor3 b, Tensor3 j, Matrix t)
    : bracket(std::move(b)), jordan(std::move(j)), twist(std::move(t)) {
  if (bracket.dim() != jordan.dim()) throw DimensionMismatch("bracket and jordan dims differ");
  if (twist.rows() != bracket.dim() || twist.cols() != bracket.dim())
    throw DimensionMismatch("twist must be square of the algebra dimension");
}

HomJMPAlgebra HomJMPAlgebra::zero(std::size_t n) { return {Tensor3(n), Tensor3(n), Matrix::identity(n)}; }

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("bilinear form argument length");
  Scalar s;
  Vector my = mat_apply(matrix, y);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s.add_product(x[i], my[i]);
  return s;
}

TwistPowers::TwistPowers(const Matrix& twist, unsigned max_power) {
  powers_.reserve(max_power + 1);
  powers_.push_back(Matrix::identity(twist.rows()));
  for (unsigned k = 1; k <= max_power; ++k) powers_.push_back(powers_.back() * twist);
}

Vector TwistPowers::apply(unsigned k, const Vector& v) const {
  if (k == 0) return v;
  return mat_apply(powers_.at(k), v);
}

Vector hom_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  check_vec(a, x), check_vec(a, y), check_vec(a, z);
  Vector lhs = apply_product(a.mul, apply_product(a.mul, x, y), mat_apply(a.twist, z));
  return lhs -= apply_product(a.mul, mat_apply(a.twist, x), apply_product(a.mul, y, z));
}

Vector hom_jacobiator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  check_vec(a, x), check_vec(a, y), check_vec(a, z);
  Vector r = apply_product(a.mul, apply_product(a.mul, x, y), mat_apply(a.twist, z));
  r += apply_product(a.mul, apply_product(a.mul, y, z), mat_apply(a.twist, x));
  r += apply_product(a.mul, apply_product(a.mul, z, x), mat_apply(a.twist, y));
  return r;
}

Vector cyclic_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  Vector r = hom_associator(a, x, y, z);
  r += hom_associator(a, y, z, x);
  r += hom_associator(a, z, x, y);
  return r;
}

HomAlgebra minus_algebra(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = a.mul(i, j, k) - a.mul(j, i, k);
  return {std::move(c), a.twist};
}

HomAlgebra plus_algebra(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  const Scalar half(1, 2);
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = half * (a.mul(i, j, k) + a.mul(j, i, k));
  return {std::move(c), a.twist};
}

HomJMPAlgebra minus_plus_pair(const HomAlgebra& a) {
  return {minus_algebra(a).mul, plus_algebra(a).mul, a.twist};
}

HomAlgebra jmp_to_admissible(const HomJMPAlgebra& j) {
  if (!j.satisfies_invariants())
    throw PreconditionFailed("jmp_to_admissible: bracket must be skewsymmetric and jordan symmetric");
  return {Scalar(1, 2) * j.bracket + j.jordan, j.twist};
}

Matrix left_mult(const HomAlgebra& a, const Vector& x) {
  check_vec(a, x);
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = apply_product(a.mul, x, basis_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix right_mult(const HomAlgebra& a, const Vector& x) {
  check_vec(a, x);
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = apply_product(a.mul, basis_vector(n, j), x);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

PowerTable hom_power_table(const HomAlgebra& a, const Vector& x, unsigned max_n, const TwistPowers& powers) {
  check_vec(a, x);
  if (max_n < 1) throw std::invalid_argument("hom_power: n must be >= 1");
  PowerTable t{x, {x}};
  t.powers.reserve(max_n);
  for (unsigned n = 2; n <= max_n; ++n) t.powers.push_back(apply_product(a.mul, t.powers.back(), powers.apply(n - 2, x)));
  return t;
}

PowerTable hom_power_table(const HomAlgebra& a, const Vector& x, unsigned max_n) {
  if (max_n < 1) throw std::invalid_argument("hom_power: n must be >= 1");
  return hom_power_table(a, x, max_n, TwistPowers(a.twist, max_n >= 2 ? max_n - 2 : 0));
}

Vector hom_power(const HomAlgebra& a, const Vector& x, unsigned n) { return hom_power_table(a, x, n)[n]; }

}  // namespace homjmp
