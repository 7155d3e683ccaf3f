#include "awstar/fdalg.hpp"

#include <gtest/gtest.h>

#include "awstar/gen.hpp"

namespace awstar::fdalg {
namespace {

Element single(const Matrix& m) {
  return {AlgebraShape{static_cast<std::size_t>(m.rows())}, {m}};
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(AlgebraShape, RejectsEmptyAndZeroBlocks) {
  EXPECT_THROW(AlgebraShape(std::vector<std::size_t>{}), InputError);
  EXPECT_THROW((AlgebraShape{2, 0}), InputError);
}

TEST(Element, ShapeMismatch) {
  auto a = Element::identity({2, 3});
  auto b = Element::identity({2});
  EXPECT_THROW(a * b, InputError);
  EXPECT_THROW(a + b, InputError);
  EXPECT_THROW(Element(AlgebraShape{2}, {Matrix::Identity(3, 3)}), InputError);
}

TEST(Element, StarOperations) {
  AlgebraShape s{2, 3};
  auto one = Element::identity(s);
  EXPECT_EQ(op_norm(adjoint(one) - one), 0.0);

  gen::Rng rng(3);
  auto x = gen::random_element(rng, s);
  EXPECT_EQ(op_norm(adjoint(adjoint(x)) - x), 0.0);

  auto e = single(0.5 * mat2(1, 1, 1, 1));
  EXPECT_LE(op_norm(e * e - e), 1e-15);
  EXPECT_LE(op_norm(Complex(2.0) * e - (e + e)), 1e-15);
}

TEST(OpNorm, Examples) {
  EXPECT_DOUBLE_EQ(op_norm(Element::identity({2, 3, 1})), 1.0);
  EXPECT_EQ(op_norm(Element::zero({4})), 0.0);
  // Singular values of a diagonal matrix are the moduli of its entries.
  EXPECT_NEAR(op_norm(single(mat2(3, 0, 0, -4))), 4.0, 1e-14);
}

TEST(OpNorm, CStarIdentity) {
  gen::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    auto x = gen::random_element(rng, gen::random_shape(rng, 3, 5));
    double n = op_norm(x);
    EXPECT_LE(std::abs(op_norm(adjoint(x) * x) - n * n), 1e-6 * (1 + n) * (1 + n));
  }
}

TEST(IsProjection, Examples) {
  Tolerance tol;
  EXPECT_TRUE(is_projection(Element::identity({3, 2}), tol));
  EXPECT_FALSE(is_projection(single(mat2(1, 0, 0, 0.5)), tol));
  // (1/2)[[1,1],[1,1]]: self-adjoint, and its square is (1/4)[[2,2],[2,2]].
  EXPECT_TRUE(is_projection(single(0.5 * mat2(1, 1, 1, 1)), tol));
  EXPECT_FALSE(is_projection(single(mat2(0, 1, 0, 1)), tol));
}

TEST(IsProjection, OrthogonalSumsAreProjections) {
  gen::Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    auto s = gen::random_shape(rng, 3, 4);
    auto fam = gen::orthogonal_family(rng, s, 2);
    ASSERT_TRUE(is_projection(fam[0]));
    ASSERT_TRUE(is_projection(fam[1]));
    EXPECT_TRUE(is_projection(fam[0] + fam[1]));
  }
}

TEST(IsNormal, Examples) {
  gen::Rng rng(2);
  auto x = gen::random_element(rng, {3, 2});
  EXPECT_TRUE(is_normal(x + adjoint(x)));
  // x x* - x* x = diag(1, -1) for the nilpotent Jordan block.
  auto j = single(mat2(0, 1, 0, 0));
  EXPECT_NEAR(op_norm(j * adjoint(j) - adjoint(j) * j), 1.0, 1e-15);
  EXPECT_FALSE(is_normal(j));
  EXPECT_TRUE(is_normal(single(mat2(0, 1, -1, 0))));
}

TEST(Commutes, Examples) {
  gen::Rng rng(4);
  auto x = gen::random_element(rng, {2, 3});
  EXPECT_TRUE(commutes(x, Element::identity({2, 3})));
  EXPECT_TRUE(commutes(x, x * x));
  EXPECT_FALSE(commutes(single(mat2(0, 1, 0, 0)), single(mat2(0, 0, 1, 0))));
}

TEST(MatrixAlgebra, Shapes) {
  EXPECT_EQ(matrix_algebra({2, 3}, 2), (AlgebraShape{4, 6}));
  EXPECT_EQ(matrix_algebra({1}, 3), (AlgebraShape{3}));
  EXPECT_EQ(matrix_algebra({2}, 1), (AlgebraShape{2}));
  EXPECT_THROW(matrix_algebra({2}, 0), InputError);
  EXPECT_EQ(base_shape({4, 6}, 2), (AlgebraShape{2, 3}));
  EXPECT_THROW(base_shape({3}, 2), InputError);
}

TEST(AEntry, Examples) {
  AlgebraShape base{2, 1};
  auto one = Element::identity(matrix_algebra(base, 3));
  EXPECT_EQ(op_norm(a_entry(one, 3, 0, 1)), 0.0);
  EXPECT_EQ(op_norm(a_entry(one, 3, 2, 2) - Element::identity(base)), 0.0);
  auto e01 = matrix_unit(base, 3, 0, 1);
  EXPECT_EQ(op_norm(a_entry(e01, 3, 0, 1) - Element::identity(base)), 0.0);
  EXPECT_EQ(op_norm(a_entry(e01, 3, 1, 0)), 0.0);
  EXPECT_THROW(a_entry(one, 3, 3, 0), InputError);
}

TEST(AEntry, TileLayout) {
  // Block k of M_n(A) is an n x n grid of n_k x n_k tiles.
  AlgebraShape base{2};
  Matrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(10 * i + j, 0);
  Element x(AlgebraShape{4}, {m});
  auto t = a_entry(x, 2, 1, 0).block(0);
  EXPECT_EQ(t(0, 0), Complex(20, 0));
  EXPECT_EQ(t(0, 1), Complex(21, 0));
  EXPECT_EQ(t(1, 0), Complex(30, 0));
  EXPECT_EQ(t(1, 1), Complex(31, 0));
}

TEST(AEntry, ReassemblyIsBitIdentical) {
  gen::Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    auto s = gen::random_shape(rng, 3, 3);
    auto n = gen::uniform(rng, 1, 4);
    auto x = gen::random_element(rng, matrix_algebra(s, n));
    auto y = assemble(n, a_entries(x, n));
    for (std::size_t k = 0; k < s.num_blocks(); ++k) EXPECT_TRUE(x.block(k) == y.block(k));
  }
}

}  // namespace
}  // namespace awstar::fdalg
