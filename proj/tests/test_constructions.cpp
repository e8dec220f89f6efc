#include "doctest.h"

#include "fixtures.hpp"
#include "homjmp/random.hpp"

using namespace homjmp;
using fixtures::e;

namespace {

HomJMPAlgebra flat_jmp() { return minus_plus_pair(ex3_flat()); }

std::vector<Matrix> flat_automorphisms() {
  const Scalar two[3] = {1, 2, Scalar(1, 2)};
  const Scalar three[3] = {1, 3, Scalar(1, 3)};
  const Scalar neg[3] = {1, -1, -1};
  return {Matrix::identity(3), ex3_involution("swap"), Matrix::diagonal(neg), Matrix::diagonal(two),
          Matrix::diagonal(three), ex3_involution("swap") * Matrix::diagonal(two)};
}

}  // namespace

TEST_CASE("yau twist by an automorphism equals the conjugation twist") {
  for (const auto& lambda : fixtures::ex3_lambdas()) {
    HomAlgebra composed = yau_twist(ex3_flat(), ex3_twist(lambda), MorphismRequirement::Full);
    HomAlgebra conj = conjugation_twist(ex3_flat(), ex3_twist(lambda));
    CHECK(composed.mul == conj.mul);
    CHECK(composed.twist == conj.twist);
    CHECK(conj.mul == ex3(lambda).mul);
  }
}

TEST_CASE("yau twist preconditions") {
  Matrix scale = Scalar(2) * Matrix::identity(3);
  CHECK_THROWS_AS(yau_twist(ex3(Scalar(2)), scale, MorphismRequirement::Weak), PreconditionFailed);
  // flat table with twist α_2: θ preserves the product but does not commute with the twist
  HomAlgebra a{ex3_flat().mul, ex3_twist(Scalar(2))};
  const Matrix theta = ex3_involution("swap");
  CHECK(check_map_properties(a, theta).weak_morphism);
  CHECK_FALSE(check_map_properties(a, theta).morphism);
  CHECK_THROWS_AS(yau_twist(a, theta, MorphismRequirement::Full), PreconditionFailed);
  HomAlgebra weak = yau_twist(a, theta, MorphismRequirement::Weak);
  CHECK(weak.twist == theta * a.twist);
}

TEST_CASE("twists of admissible algebras stay admissible") {
  HomAlgebra a = ex3(Scalar(5, 7));
  for (unsigned k = 0; k < 3; ++k) {
    HomAlgebra t = yau_twist(a, a.twist.power(k), MorphismRequirement::Full);
    CHECK(check_admissible_jmp(t).pass);
  }
}

TEST_CASE("T*-extension agrees with the functional construction") {
  HomJMPAlgebra base = flat_jmp();
  TStarExtension ext = t_star_extension(base);
  HomJMPAlgebra oracle = t_star_products_by_functionals(base);
  CHECK(ext.result.bracket == oracle.bracket);
  CHECK(ext.result.jordan == oracle.jordan);
  CHECK(ext.result.dim() == 6);
  CHECK(ext.result.twist == Matrix::identity(6));
  CHECK(rank(ext.form.matrix) == 6);
  CHECK(ext.form.matrix == ext.form.matrix.transpose());
  CHECK(check_pseudo_euclidean_homjmp(ext.result, ext.form).pass);
  CHECK(check_hom_jmp(ext.result).pass);

  RationalSampler rs(12);
  // generic pairs and twisted bases are rejected
  HomAlgebra g{rs.tensor(3), Matrix::identity(3)};
  HomJMPAlgebra pair = minus_plus_pair(g);
  CHECK_THROWS_AS(t_star_extension(pair), PreconditionFailed);
  CHECK_THROWS_AS(t_star_extension(minus_plus_pair(ex3(Scalar(2)))), PreconditionFailed);
}

TEST_CASE("centers of ex3-flat") {
  HomJMPAlgebra base = flat_jmp();
  CHECK(center_malcev(base).empty());
  CHECK(center_jordan(base).size() == 3);
  HomJMPAlgebra z = HomJMPAlgebra::zero(2);
  CHECK(center_malcev(z).size() == 2);
  CHECK(in_span(center_jordan(base), e(3, 1)));
  CHECK_FALSE(in_span({}, e(3, 1)));
}

TEST_CASE("beta-automorphism verdict matches the center criterion") {
  TStarExtension ext = t_star_extension(flat_jmp());
  int automorphisms = 0;
  for (const Matrix& a : flat_automorphisms()) {
    REQUIRE(check_map_properties(flat_jmp(), a).automorphism);
    BetaAutomorphism b = beta_from_automorphism(ext, a);
    CHECK(b.is_automorphism == b.image_in_centers);
    CHECK(b.is_automorphism == (a * a == Matrix::identity(3)));
    automorphisms += b.is_automorphism;
  }
  CHECK(automorphisms == 4);
  CHECK_THROWS_AS(beta_from_automorphism(ext, Scalar(2) * Matrix::identity(3)), PreconditionFailed);
}

TEST_CASE("twisted pseudo-euclidean structure from an involution") {
  TStarExtension ext = t_star_extension(flat_jmp());
  for (const std::string name : {"swap", "neg", "id"}) {
    BetaAutomorphism b = beta_from_automorphism(ext, ex3_involution(name));
    REQUIRE(b.is_automorphism);
    auto [j, form] = twisted_pseudo_euclidean(ext.result, ext.form, b.beta);
    CHECK(is_regular(j));
    CHECK(check_pseudo_euclidean_homjmp(j, form).pass);
    CHECK(form.matrix == b.beta.transpose() * ext.form.matrix);
    CHECK(j.bracket == compose_left(b.beta, ext.result.bracket));
  }
  BetaAutomorphism bad = beta_from_automorphism(ext, flat_automorphisms()[3]);
  CHECK_THROWS_AS(twisted_pseudo_euclidean(ext.result, ext.form, bad.beta), PreconditionFailed);
}

TEST_CASE("A_n family stays pseudo-euclidean") {
  AlgebraDocument p6 = fixtures::p6();
  HomJMPAlgebra j = fixtures::jmp_of(p6);
  for (unsigned n = 0; n <= 4; ++n) {
    auto [an, bn] = an_family(j, *p6.form, n);
    CHECK(an.twist == j.twist.power(n + 1));
    CHECK(bn.matrix == j.twist.power(n).transpose() * p6.form->matrix);
    CHECK(check_pseudo_euclidean_homjmp(an, bn).pass);
  }
  auto [a0, b0] = an_family(j, *p6.form, 0);
  CHECK(a0.bracket == j.bracket);
  CHECK(b0 == *p6.form);
  BilinearForm wrong{Matrix::identity(6)};
  CHECK_THROWS_AS(an_family(j, wrong, 1), PreconditionFailed);
}

TEST_CASE("regularity is invertibility of the twist") {
  CHECK(is_regular(HomJMPAlgebra::zero(3)));
  HomJMPAlgebra j = HomJMPAlgebra::zero(3);
  j.twist = Matrix(3, 3);
  CHECK_FALSE(is_regular(j));
}
