#include "doctest.h"

#include <string>

#include "homjmp/linalg.hpp"
#include "homjmp/random.hpp"

using namespace homjmp;

TEST_CASE("scalars are kept in lowest terms") {
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(3, -6) == Scalar(-1, 2));
  CHECK(Scalar::parse("-6/8").str() == "-3/4");
  CHECK(Scalar::parse("+5").str() == "5");
  CHECK(Scalar::parse("0/7").is_zero());
  CHECK((Scalar(1, 3) + Scalar(1, 6)).str() == "1/2");
  CHECK(Scalar(4, 6).denominator() == 3);
  CHECK(Scalar(-2, 3).inverse() == Scalar(-3, 2));
}

TEST_CASE("scalar parsing rejects malformed input") {
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x/2"), ParseError);
  CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
  try {
    Scalar::parse("1/0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("denominator must be positive") != std::string::npos);
  }
  CHECK_THROWS_AS(Scalar::parse("1/-2"), ParseError);
}

TEST_CASE("rank of known matrices") {
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(Matrix(3, 5)) == 0);
  Matrix m(3, 3);
  // rows (1,2,3), (2,4,6), (1/2,0,1): second is twice the first
  const long v[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  m(2, 0) = Scalar(1, 2);
  CHECK(rank(m) == 2);
}

TEST_CASE("rank equals rank of the transpose and kernel dimension is complementary") {
  RationalSampler rs(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6, inner = 1 + trial % 4;
    // products of thin factors give rank-deficient matrices
    Matrix m = trial % 2 ? rs.matrix(r, inner) * rs.matrix(inner, c) : rs.matrix(r, c);
    const std::size_t rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    auto ker = kernel_basis(m);
    CHECK(ker.size() + rk == c);
    for (const auto& v : ker) CHECK(is_zero(mat_apply(m, v)));
    if (!ker.empty()) CHECK(rank(Matrix::from_columns(ker)) == ker.size());
  }
}

TEST_CASE("matrix algebra") {
  RationalSampler rs(3);
  Matrix a = rs.matrix(3, 3), b = rs.matrix(3, 3), c = rs.matrix(3, 3);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK(a.power(0) == Matrix::identity(3));
  CHECK(a.power(3) == a * a * a);
  Vector x = rs.vector(3);
  CHECK(mat_apply(a * b, x) == mat_apply(a, mat_apply(b, x)));
  CHECK((a + b) - b == a);
  CHECK(Matrix::from_columns(std::vector<Vector>{a.column(0), a.column(1), a.column(2)}) == a);
}

TEST_CASE("products of tensors are bilinear") {
  RationalSampler rs(11);
  for (int trial = 0; trial < 10; ++trial) {
    Tensor3 c = rs.tensor(4);
    Vector x = rs.vector(4), y = rs.vector(4), z = rs.vector(4);
    Scalar s = rs.scalar();
    CHECK(apply_product(c, x + s * y, z) == apply_product(c, x, z) + s * apply_product(c, y, z));
    CHECK(apply_product(c, z, x + s * y) == apply_product(c, z, x) + s * apply_product(c, z, y));
  }
}

TEST_CASE("tensor composition helpers") {
  RationalSampler rs(5);
  Tensor3 c = rs.tensor(3);
  Matrix m = rs.matrix(3, 3);
  Vector x = rs.vector(3), y = rs.vector(3);
  CHECK(apply_product(compose_left(m, c), x, y) == mat_apply(m, apply_product(c, x, y)));
  CHECK(apply_product(conjugate_inputs(c, m), x, y) == apply_product(c, mat_apply(m, x), mat_apply(m, y)));
  Tensor3 sym(3), skew(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        sym(i, j, k) = c(i, j, k) + c(j, i, k);
        skew(i, j, k) = c(i, j, k) - c(j, i, k);
      }
  CHECK(sym.is_symmetric());
  CHECK(skew.is_skew());
  CHECK_FALSE(c.is_symmetric());
}

TEST_CASE("seeded sampler output is frozen") {
  RationalSampler a(42), b(42);
  CHECK(a.tensor(3) == b.tensor(3));
  RationalSampler c(42);
  const Scalar first = c.scalar();
  RationalSampler d(42);
  CHECK(d.scalar() == first);
}
