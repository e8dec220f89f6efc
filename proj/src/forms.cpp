#include "homjmp/forms.hpp"

#include <functional>

namespace homjmp {

namespace {

void require_dims(std::size_t n, const BilinearForm& b, const Matrix* gamma) {
  if (b.matrix.rows() != n || b.matrix.cols() != n) throw DimensionMismatch("form must be square of the algebra dimension");
  if (gamma && (gamma->rows() != n || gamma->cols() != n)) throw DimensionMismatch("gamma must be square of the algebra dimension");
}

/// B(p(e_i,e_j), g e_k) − B(g e_i, p(e_j,e_k)) as a length-1 residual.
Vector invariance_residual(const Tensor3& p, const BilinearForm& b, const Matrix& g, std::size_t i, std::size_t j,
                           std::size_t k) {
  Scalar lhs = b(p.product_of_basis(i, j), g.column(k));
  Scalar rhs = b(g.column(i), p.product_of_basis(j, k));
  return {lhs - rhs};
}

CheckReport scalar_enumeration(std::string name, std::size_t n, std::size_t arity,
                               const std::function<Vector(const std::vector<std::size_t>&)>& residual) {
  CheckReport r;
  r.identity = std::move(name);
  std::uint64_t total = n == 0 ? 0 : 1;
  for (std::size_t i = 0; i < arity && n; ++i) total *= n;
  auto first = find_first_failure(total, [&](std::uint64_t idx) { return !is_zero(residual(decode_tuple(idx, n, arity))); });
  if (!first) {
    r.tuples_checked = total;
    return r;
  }
  Witness w;
  w.basis_tuple = decode_tuple(*first, n, arity);
  for (auto i : w.basis_tuple) w.inputs.push_back(basis_vector(n, i));
  w.residual = residual(w.basis_tuple);
  r.pass = false;
  r.witness = std::move(w);
  r.tuples_checked = *first + 1;
  return r;
}

CheckReport invariance_report(std::string name, const Tensor3& p, const BilinearForm& b, const Matrix& g) {
  return scalar_enumeration(std::move(name), p.dim(), 3,
                            [&](const auto& v) { return invariance_residual(p, b, g, v[0], v[1], v[2]); });
}

CheckReport flag_report(std::string name, bool ok) {
  CheckReport r;
  r.identity = std::move(name);
  r.pass = ok;
  r.tuples_checked = 1;
  return r;
}

bool alpha_compatible(const BilinearForm& b, const Matrix& twist) {
  // B(αx, y) = B(x, αy)  ⇔  αᵀB = Bα
  return twist.transpose() * b.matrix == b.matrix * twist;
}

FormFlags form_flags(std::initializer_list<std::pair<const char*, const Tensor3*>> products, const Matrix& twist,
                     const BilinearForm& b, const Matrix* gamma) {
  const std::size_t n = twist.rows();
  require_dims(n, b, gamma);
  FormFlags f;
  f.symmetric = b.matrix == b.matrix.transpose();
  f.nondegenerate = rank(b.matrix) == n;
  const Matrix id = Matrix::identity(n);
  for (auto [name, p] : products) f.invariant[name] = invariance_report(name, *p, b, id).pass;
  f.alpha_compatible = alpha_compatible(b, twist);
  if (gamma) {
    bool ok = true;
    for (auto [name, p] : products) ok = ok && invariance_report(name, *p, b, *gamma).pass;
    f.gamma_invariant = ok;
  }
  return f;
}

}  // namespace

FormFlags check_form_properties(const HomAlgebra& a, const BilinearForm& b, const Matrix* gamma) {
  require_dims(a.dim(), b, gamma);
  if (gamma && !check_map_properties(a, *gamma).weak_morphism)
    throw PreconditionFailed("check_form_properties: gamma is not a homomorphism");
  return form_flags({{"mul", &a.mul}}, a.twist, b, gamma);
}

FormFlags check_form_properties(const HomJMPAlgebra& j, const BilinearForm& b, const Matrix* gamma) {
  require_dims(j.dim(), b, gamma);
  if (gamma && !check_map_properties(j, *gamma).weak_morphism)
    throw PreconditionFailed("check_form_properties: gamma is not a homomorphism");
  return form_flags({{"bracket", &j.bracket}, {"jordan", &j.jordan}}, j.twist, b, gamma);
}

CheckReport check_pseudo_euclidean_homjmp(const HomJMPAlgebra& j, const BilinearForm& b) {
  const std::size_t n = j.dim();
  require_dims(n, b, nullptr);
  const Matrix id = Matrix::identity(n);
  return CheckReport::conjunction("pseudo-euclidean-hom-jmp",
                                  {flag_report("form-symmetric", b.matrix == b.matrix.transpose()),
                                   flag_report("form-nondegenerate", rank(b.matrix) == n),
                                   invariance_report("bracket-invariant", j.bracket, b, id),
                                   invariance_report("jordan-invariant", j.jordan, b, id),
                                   flag_report("alpha-compatible", alpha_compatible(b, j.twist))});
}

CheckReport check_triple_invariance(const HomTripleSystem& t, const BilinearForm& b, const Matrix* gamma) {
  const std::size_t n = t.dim();
  require_dims(n, b, gamma);
  const Matrix g = gamma ? *gamma : Matrix::identity(n);
  std::vector<Vector> gc(n);
  for (std::size_t i = 0; i < n; ++i) gc[i] = g.column(i);

  CheckReport inv = scalar_enumeration("triple-invariance-identity", n, 4, [&](const auto& v) {
    const std::size_t x = v[0], y = v[1], z = v[2], w = v[3];
    Scalar lhs = b(t.triple.product_of_basis(x, y, z), gc[w]);
    Scalar rhs = -b(gc[z], t.triple.product_of_basis(x, y, w));
    return Vector{lhs - rhs};
  });
  return CheckReport::conjunction("triple-invariance",
                                  {std::move(inv), flag_report("alpha-compatible", alpha_compatible(b, t.twist))});
}

}  // namespace homjmp
