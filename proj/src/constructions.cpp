#include "homjmp/constructions.hpp"

#include "homjmp/forms.hpp"

namespace homjmp {

namespace {

void require_map(const MapFlags& f, MorphismRequirement require, const char* what) {
  if (require == MorphismRequirement::Full && !f.morphism)
    throw PreconditionFailed(std::string(what) + ": map is not a morphism");
  if (!f.weak_morphism) throw PreconditionFailed(std::string(what) + ": map is not a weak morphism");
}

}  // namespace

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta, MorphismRequirement require) {
  require_map(check_map_properties(a, beta), require, "yau_twist");
  return {compose_left(beta, a.mul), beta * a.twist};
}

HomJMPAlgebra yau_twist(const HomJMPAlgebra& j, const Matrix& beta, MorphismRequirement require) {
  require_map(check_map_properties(j, beta), require, "yau_twist");
  return {compose_left(beta, j.bracket), compose_left(beta, j.jordan), beta * j.twist};
}

HomAlgebra conjugation_twist(const HomAlgebra& alg, const Matrix& a) {
  return {conjugate_inputs(alg.mul, a), a * alg.twist};
}

HomJMPAlgebra conjugation_twist(const HomJMPAlgebra& j, const Matrix& a) {
  return {conjugate_inputs(j.bracket, a), conjugate_inputs(j.jordan, a), a * j.twist};
}

std::pair<HomJMPAlgebra, BilinearForm> an_family(const HomJMPAlgebra& j, const BilinearForm& b, unsigned n) {
  if (!check_pseudo_euclidean_homjmp(j, b).pass)
    throw PreconditionFailed("an_family: input is not a pseudo-Euclidean Hom-JMP algebra");
  const Matrix an = j.twist.power(n);
  HomJMPAlgebra out{compose_left(an, j.bracket), compose_left(an, j.jordan), an * j.twist};
  return {std::move(out), BilinearForm{an.transpose() * b.matrix}};
}

TStarExtension t_star_extension(const HomJMPAlgebra& base) {
  const std::size_t n = base.dim();
  if (base.twist != Matrix::identity(n)) throw PreconditionFailed("t_star_extension: base twist must be the identity");
  if (!check_hom_jmp(base).pass) throw PreconditionFailed("t_star_extension: base is not a JMP algebra");

  const std::size_t m = 2 * n;
  Tensor3 br(m), jo(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        br(i, j, k) = base.bracket(i, j, k);
        jo(i, j, k) = base.jordan(i, j, k);
        // {e^i, e_j} = Σ_k c[j][k][i] e^k,   {e_i, e^j} = −Σ_k c[i][k][j] e^k
        br(n + i, j, n + k) = base.bracket(j, k, i);
        br(i, n + j, n + k) = -base.bracket(i, k, j);
        // e^i ∘ e_j = Σ_k c[j][k][i] e^k,    e_i ∘ e^j = Σ_k c[i][k][j] e^k
        jo(n + i, j, n + k) = base.jordan(j, k, i);
        jo(i, n + j, n + k) = base.jordan(i, k, j);
      }

  Matrix form(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    form(i, n + i) = 1;
    form(n + i, i) = 1;
  }
  return {base, HomJMPAlgebra{std::move(br), std::move(jo), Matrix::identity(m)}, BilinearForm{std::move(form)}};
}

HomJMPAlgebra t_star_products_by_functionals(const HomJMPAlgebra& base) {
  const std::size_t n = base.dim(), m = 2 * n;
  // An element x + f of P as a pair of coordinate vectors.
  struct Elem {
    Vector x, f;
  };
  auto split = [&](std::size_t idx) {
    Elem e{zero_vector(n), zero_vector(n)};
    if (idx < n) e.x[idx] = 1;
    else e.f[idx - n] = 1;
    return e;
  };
  // (f ∘ op_y)(e_k) = f(op(y, e_k))
  auto pull_back = [&](const Tensor3& c, const Vector& f, const Vector& y) {
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k) {
      Vector img = apply_product(c, y, basis_vector(n, k));
      for (std::size_t l = 0; l < n; ++l) out[k].add_product(f[l], img[l]);
    }
    return out;
  };

  Tensor3 br(m), jo(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Elem u = split(a), v = split(b);
      Vector bx = apply_product(base.bracket, u.x, v.x);
      Vector bf = pull_back(base.bracket, u.f, v.x) - pull_back(base.bracket, v.f, u.x);
      Vector jx = apply_product(base.jordan, u.x, v.x);
      Vector jf = pull_back(base.jordan, u.f, v.x) + pull_back(base.jordan, v.f, u.x);
      for (std::size_t k = 0; k < n; ++k) {
        br(a, b, k) = bx[k];
        br(a, b, n + k) = bf[k];
        jo(a, b, k) = jx[k];
        jo(a, b, n + k) = jf[k];
      }
    }
  return {std::move(br), std::move(jo), Matrix::identity(m)};
}

namespace {

Matrix stacked_multiplications(const Tensor3& c) {
  const std::size_t n = c.dim();
  HomAlgebra alg{c, Matrix::identity(n)};
  Matrix s(2 * n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix r = right_mult(alg, basis_vector(n, j));
    Matrix l = left_mult(alg, basis_vector(n, j));
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) {
        s(2 * j * n + row, col) = r(row, col);
        s((2 * j + 1) * n + row, col) = l(row, col);
      }
  }
  return s;
}

std::vector<Vector> annihilator(const Tensor3& c) {
  const std::size_t n = c.dim();
  if (n == 0) return {};
  return kernel_basis(stacked_multiplications(c));
}

}  // namespace

std::vector<Vector> center_malcev(const HomJMPAlgebra& j) { return annihilator(j.bracket); }

std::vector<Vector> center_jordan(const HomJMPAlgebra& j) { return annihilator(j.jordan); }

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<Vector> cols = basis;
  const std::size_t r = rank(Matrix::from_columns(cols));
  cols.push_back(v);
  return rank(Matrix::from_columns(cols)) == r;
}

BetaAutomorphism beta_from_automorphism(const TStarExtension& ext, const Matrix& a) {
  const std::size_t n = ext.base.dim();
  if (!check_map_properties(ext.base, a).automorphism)
    throw PreconditionFailed("beta_from_automorphism: map is not an automorphism of the base");

  const Matrix at = dual_transpose(a);
  Matrix beta(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      beta(i, j) = a(i, j);
      beta(n + i, n + j) = at(i, j);
    }

  const bool is_auto = check_map_properties(ext.result, beta).automorphism;

  const Matrix defect = a * a - Matrix::identity(n);
  const auto zm = center_malcev(ext.base);
  const auto zj = center_jordan(ext.base);
  bool inside = true;
  for (std::size_t c = 0; c < n && inside; ++c) {
    Vector col = defect.column(c);
    inside = in_span(zm, col) && in_span(zj, col);
  }
  return {std::move(beta), is_auto, inside};
}

std::pair<HomJMPAlgebra, BilinearForm> twisted_pseudo_euclidean(const HomJMPAlgebra& j, const BilinearForm& b,
                                                                const Matrix& a) {
  MapFlags f = check_map_properties(j, a, &b);
  if (!f.automorphism || !f.symmetric_wrt_form.value_or(false))
    throw PreconditionFailed("twisted_pseudo_euclidean: map is not a symmetric automorphism");
  return {conjugation_twist(j, a), BilinearForm{a.transpose() * b.matrix}};
}

bool is_regular(const HomJMPAlgebra& j) { return rank(j.twist) == j.dim(); }

}  // namespace homjmp
