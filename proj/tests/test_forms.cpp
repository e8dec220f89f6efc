#include "doctest.h"

#include "fixtures.hpp"
#include "homjmp/random.hpp"

using namespace homjmp;

TEST_CASE("form flags on the T*-extension") {
  TStarExtension ext = t_star_extension(minus_plus_pair(ex3_flat()));
  FormFlags f = check_form_properties(ext.result, ext.form);
  CHECK(f.symmetric);
  CHECK(f.nondegenerate);
  CHECK(f.invariant.at("bracket"));
  CHECK(f.invariant.at("jordan"));
  CHECK(f.alpha_compatible);
  CHECK_FALSE(f.gamma_invariant.has_value());
}

TEST_CASE("degenerate and non-invariant forms are reported per condition") {
  TStarExtension ext = t_star_extension(minus_plus_pair(ex3_flat()));
  Matrix half = ext.form.matrix;
  for (std::size_t i = 0; i < 3; ++i) half(i, i + 3) = half(i + 3, i) = 0;
  half(0, 3) = half(3, 0) = 1;
  CheckReport r = check_pseudo_euclidean_homjmp(ext.result, BilinearForm{half});
  CHECK_FALSE(r.pass);
  CHECK(r.find("form-symmetric")->pass);
  CHECK_FALSE(r.find("form-nondegenerate")->pass);

  CheckReport id = check_pseudo_euclidean_homjmp(ext.result, BilinearForm{Matrix::identity(6)});
  CHECK_FALSE(id.pass);
  const CheckReport* inv = id.find("bracket-invariant");
  REQUIRE(inv);
  CHECK_FALSE(inv->pass);
  REQUIRE(inv->witness);
  CHECK(inv->witness->residual.size() == 1);
  CHECK_FALSE(inv->witness->residual[0].is_zero());
}

TEST_CASE("the Killing-type form of ex3-flat is invariant on the bracket") {
  // sl2-type bracket: trace form B(x,y) = tr(ad x ad y)
  HomAlgebra m = minus_algebra(ex3_flat());
  Matrix k(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Matrix prod = left_mult(m, basis_vector(3, i)) * left_mult(m, basis_vector(3, j));
      Scalar t;
      for (std::size_t d = 0; d < 3; ++d) t += prod(d, d);
      k(i, j) = t;
    }
  FormFlags f = check_form_properties(m, BilinearForm{k});
  CHECK(f.symmetric);
  CHECK(f.nondegenerate);
  CHECK(f.invariant.at("mul"));
  CHECK(f.alpha_compatible);
  FormFlags g = check_form_properties(m, BilinearForm{k}, &static_cast<const Matrix&>(Matrix::identity(3)));
  CHECK(g.gamma_invariant.value());
}

TEST_CASE("gamma must be a homomorphism") {
  HomAlgebra m = minus_algebra(ex3_flat());
  Matrix g = Scalar(3) * Matrix::identity(3);
  CHECK_THROWS_AS(check_form_properties(m, BilinearForm{Matrix::identity(3)}, &g), PreconditionFailed);
  CHECK_THROWS_AS(check_form_properties(m, BilinearForm{Matrix::identity(2)}), DimensionMismatch);
}

TEST_CASE("alpha-compatibility of the twisted form") {
  AlgebraDocument p6 = fixtures::p6();
  HomJMPAlgebra j = fixtures::jmp_of(p6);
  const Matrix& b = p6.form->matrix;
  CHECK(j.twist.transpose() * b == b * j.twist);
  CHECK(check_pseudo_euclidean_homjmp(j, *p6.form).pass);
}

TEST_CASE("triple invariance on the derived system of P6") {
  AlgebraDocument p6 = fixtures::p6();
  HomJMPAlgebra j = fixtures::jmp_of(p6);
  HLJPSystem s = hljp_from_homjmp(j);
  CheckReport r = check_triple_invariance(s.triple_system(), *p6.form, &j.twist);
  CHECK(r.pass);
  CHECK(r.find("triple-invariance-identity")->tuples_checked == 6 * 6 * 6 * 6);

  RationalSampler rs(8);
  Matrix rnd = rs.matrix(6, 6);
  BilinearForm sym{rnd + rnd.transpose()};
  CHECK_FALSE(check_triple_invariance(s.triple_system(), sym, &j.twist).pass);
}
