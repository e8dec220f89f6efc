#include "doctest.h"

#include "fixtures.hpp"
#include "homjmp/random.hpp"

using namespace homjmp;
using fixtures::e;

namespace {

/// {x,y,z} expanded directly from the bracket table, basis by basis.
Vector triple_by_hand(const HomAlgebra& m, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = m.dim();
  auto br = [&](const Vector& x, const Vector& y) { return apply_product(m.mul, x, y); };
  auto al = [&](std::size_t idx) { return m.twist.column(idx); };
  return Scalar(2) * br(br(e(n, i), e(n, j)), al(k)) - br(br(e(n, j), e(n, k)), al(i)) -
         br(br(e(n, k), e(n, i)), al(j));
}

}  // namespace

TEST_CASE("triple system of a Hom-Malcev bracket") {
  for (const auto& lambda : fixtures::ex3_lambdas()) {
    CAPTURE(lambda.str());
    HomAlgebra m = minus_algebra(ex3(lambda));
    HomTripleSystem t = triple_from_malcev(m);
    CHECK(t.twist == m.twist * m.twist);
    CHECK(t.is_multiplicative());
    CheckReport r = check_hlts_axioms(t);
    CHECK(r.pass);
    CHECK(r.find("fundamental-identity")->tuples_checked == 3 * 3 * 3 * 3 * 3);
  }
}

TEST_CASE("triple tensor matches the pointwise formula") {
  HomAlgebra m = minus_algebra(ex3(Scalar(3)));
  HomTripleSystem t = triple_from_malcev(m);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(t.triple.product_of_basis(i, j, k) == triple_by_hand(m, i, j, k));
  // trilinear extension agrees with the vector formula off the basis
  RationalSampler rs(4);
  Vector x = rs.vector(3), y = rs.vector(3), z = rs.vector(3);
  CHECK(apply_triple(t.triple, x, y, z) == malcev_triple_product(m, x, y, z));
}

TEST_CASE("non-Malcev brackets are rejected") {
  RationalSampler rs(6);
  HomAlgebra g{rs.tensor(3), Matrix::identity(3)};
  CHECK_THROWS_AS(triple_from_malcev(minus_algebra(g)), PreconditionFailed);
  CHECK_THROWS_AS(triple_from_malcev(g), PreconditionFailed);
}

TEST_CASE("HLTS axioms fail with a witness on a generic tensor") {
  RationalSampler rs(10);
  Tensor4 t(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) t(i, j, k, l) = rs.scalar();
  CheckReport r = check_hlts_axioms(HomTripleSystem{t, Matrix::identity(2)});
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK_FALSE(is_zero(r.witness->residual));
  CHECK(check_hlts_axioms(HomTripleSystem{Tensor4(2), Matrix::identity(2)}).pass);
}

TEST_CASE("HLJP system of an admissible algebra") {
  for (const auto& lambda : fixtures::ex3_lambdas()) {
    HomJMPAlgebra j = minus_plus_pair(ex3(lambda));
    HLJPSystem s = hljp_from_homjmp(j);
    CHECK(s.twist == j.twist * j.twist);
    CHECK(s.jordan == conjugate_inputs(j.jordan, j.twist));
    CheckReport r = check_hljp(s);
    CHECK(r.pass);
    // the Jordan part is zero, hence associative as well
    CHECK(r.cross_checks.at("hom-lie-poisson"));
  }
}

TEST_CASE("HLJP system of the pseudo-euclidean P6") {
  AlgebraDocument p6 = fixtures::p6();
  HLJPSystem s = hljp_from_homjmp(fixtures::jmp_of(p6));
  CHECK(check_hljp(s).pass);
  CHECK(s.triple_system().is_multiplicative());
}

TEST_CASE("ternary leibniz failure is detected") {
  HomJMPAlgebra j = minus_plus_pair(ex3(Scalar(2)));
  HLJPSystem s = hljp_from_homjmp(j);
  RationalSampler rs(13);
  Tensor3 sym = rs.tensor(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < a; ++b)
      for (std::size_t c = 0; c < 3; ++c) sym(b, a, c) = sym(a, b, c);
  s.jordan = sym;
  CheckReport r = check_hljp(s);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.cross_checks.at("hom-lie-poisson"));
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(HomTripleSystem(Tensor4(3), Matrix::identity(2)), DimensionMismatch);
  CHECK_THROWS_AS(HLJPSystem(Tensor4(3), Tensor3(2), Matrix::identity(3)), DimensionMismatch);
}
