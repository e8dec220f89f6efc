#pragma once

#include <cstddef>
#include <vector>

#include "homjmp/linalg.hpp"

namespace homjmp {

/// (A, mul, twist): one bilinear product and the twisting map.
struct HomAlgebra {
  Tensor3 mul;
  Matrix twist;

  HomAlgebra() = default;
  HomAlgebra(Tensor3 m, Matrix t);

  std::size_t dim() const { return mul.dim(); }
  /// Zero product, identity twist.
  static HomAlgebra zero(std::size_t n);
};

/// (A, {,}, o, twist): a bracket and a Jordan product sharing one twist.
/// The bracket is expected skewsymmetric and the Jordan product symmetric;
/// checkers report violations rather than the constructor rejecting them.
struct HomJMPAlgebra {
  Tensor3 bracket;
  Tensor3 jordan;
  Matrix twist;

  HomJMPAlgebra() = default;
  HomJMPAlgebra(Tensor3 b, Tensor3 j, Matrix t);

  std::size_t dim() const { return bracket.dim(); }
  bool satisfies_invariants() const { return bracket.is_skew() && jordan.is_symmetric(); }
  static HomJMPAlgebra zero(std::size_t n);

  HomAlgebra bracket_algebra() const { return {bracket, twist}; }
  HomAlgebra jordan_algebra() const { return {jordan, twist}; }
};

/// B(e_i, e_j) = matrix(i, j).
struct BilinearForm {
  Matrix matrix;

  std::size_t dim() const { return matrix.rows(); }
  Scalar operator()(const Vector& x, const Vector& y) const;
  BilinearForm scaled(const Scalar& s) const { return {s * matrix}; }
  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// Cached twist powers twist^0 .. twist^max.
class TwistPowers {
 public:
  TwistPowers() = default;
  TwistPowers(const Matrix& twist, unsigned max_power);
  const Matrix& operator[](unsigned k) const { return powers_.at(k); }
  unsigned max_power() const { return static_cast<unsigned>(powers_.size()) - 1; }
  Vector apply(unsigned k, const Vector& v) const;

 private:
  std::vector<Matrix> powers_;
};

/// (xy)α(z) − α(x)(yz)
Vector hom_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
/// Cyclic sum of (xy)α(z).
Vector hom_jacobiator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
/// Cyclic sum of the Hom-associator.
Vector cyclic_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

/// Commutator algebra: [x,y] = xy − yx.
HomAlgebra minus_algebra(const HomAlgebra& a);
/// Anticommutator algebra: x∘y = (xy + yx)/2.
HomAlgebra plus_algebra(const HomAlgebra& a);
/// The pair (A⁻, A⁺) as a Hom-JMP candidate.
HomJMPAlgebra minus_plus_pair(const HomAlgebra& a);
/// Single product xy = {x,y}/2 + x∘y.
HomAlgebra jmp_to_admissible(const HomJMPAlgebra& j);

/// Matrix of y ↦ xy.
Matrix left_mult(const HomAlgebra& a, const Vector& x);
/// Matrix of y ↦ yx.
Matrix right_mult(const HomAlgebra& a, const Vector& x);

/// Hom-powers x^1 .. x^N with x^1 = x and x^n = x^{n-1} α^{n-2}(x).
struct PowerTable {
  Vector base;
  std::vector<Vector> powers;  // powers[k] = x^{k+1}

  const Vector& operator[](unsigned n) const { return powers.at(n - 1); }
};

PowerTable hom_power_table(const HomAlgebra& a, const Vector& x, unsigned max_n);
PowerTable hom_power_table(const HomAlgebra& a, const Vector& x, unsigned max_n, const TwistPowers& powers);
Vector hom_power(const HomAlgebra& a, const Vector& x, unsigned n);

}  // namespace homjmp
