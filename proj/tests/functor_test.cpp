#include "awstar/functor.hpp"

#include <gtest/gtest.h>

#include "awstar/gen.hpp"

namespace awstar::functor {
namespace {

using fdalg::Complex;
using fdalg::op_norm;

TEST(Apply, IdentityHom) {
  gen::Rng rng(71);
  AlgebraShape s({2, 3});
  auto x = gen::random_element(rng, s);
  EXPECT_EQ(op_norm(StarHom::identity(s).apply(x) - x), 0.0);
}

TEST(Apply, ScalarsIntoM2) {
  auto h = StarHom::embedding({1}, {{2}});
  EXPECT_EQ(h.codomain(), AlgebraShape({2}));
  Element lam({1}, {Matrix::Constant(1, 1, Complex(2, -1))});
  Matrix want = Matrix::Identity(2, 2) * Complex(2, -1);
  EXPECT_EQ(h.apply(lam).block(0), want);
}

TEST(Apply, RejectsBadData) {
  EXPECT_THROW(StarHom({1}, {3}, {{2}}, {Matrix::Identity(3, 3)}), InputError);
  EXPECT_THROW(StarHom({1}, {2}, {{2}}, {Matrix::Constant(2, 2, 1.0)}), InputError);
  EXPECT_THROW(StarHom::identity({2}).apply(Element::identity({3})), InputError);
}

TEST(Apply, StarHomLaws) {
  gen::Rng rng(73);
  for (int t = 0; t < 30; ++t) {
    auto dom = gen::random_shape(rng, 3, 3);
    auto h = gen::random_star_hom(rng, dom);
    auto x = gen::random_element(rng, dom);
    auto y = gen::random_element(rng, dom);
    EXPECT_LE(op_norm(h.apply(x * y) - h.apply(x) * h.apply(y)), 1e-10 * (1 + op_norm(x) * op_norm(y)));
    EXPECT_LE(op_norm(h.apply(fdalg::adjoint(x)) - fdalg::adjoint(h.apply(x))), 1e-10 * (1 + op_norm(x)));
    EXPECT_LE(op_norm(h.apply(Element::identity(dom)) - Element::identity(h.codomain())), 1e-10);
  }
}

TEST(Compose, MatchesSequentialApplication) {
  gen::Rng rng(79);
  for (int t = 0; t < 30; ++t) {
    auto a = gen::random_shape(rng, 3, 3);
    auto g = gen::random_star_hom(rng, a);
    auto h = gen::random_star_hom(rng, g.codomain());
    auto hg = compose(h, g);
    for (std::size_t l = 0; l < hg.codomain().num_blocks(); ++l)
      for (std::size_t k = 0; k < a.num_blocks(); ++k) {
        std::size_t m = 0;
        for (std::size_t j = 0; j < g.codomain().num_blocks(); ++j)
          m += h.multiplicities()[l][j] * g.multiplicities()[j][k];
        EXPECT_EQ(hg.multiplicities()[l][k], m);
      }
    auto x = gen::random_element(rng, a);
    EXPECT_LE(op_norm(hg.apply(x) - h.apply(g.apply(x))), 1e-10 * (1 + op_norm(x)));
  }
  EXPECT_THROW(compose(StarHom::identity({2}), StarHom::identity({3})), InputError);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_projection(StarHom::identity({2, 1})), projlat::CentralProjection::none(2));
  auto first = StarHom::embedding({1, 1}, {{1, 0}});
  EXPECT_EQ(kernel_projection(first), projlat::CentralProjection({false, true}));
  // ker(h) = zA on a basis: the killed block maps to zero, the other does not.
  Element e1({1, 1}, {Matrix::Ones(1, 1), Matrix::Zero(1, 1)});
  Element e2({1, 1}, {Matrix::Zero(1, 1), Matrix::Ones(1, 1)});
  EXPECT_EQ(op_norm(first.apply(e2)), 0.0);
  EXPECT_GT(op_norm(first.apply(e1)), 0.5);

  auto h = StarHom::embedding({2, 1, 3}, {{1, 0, 0}, {0, 2, 1}});
  EXPECT_EQ(kernel_projection(h), projlat::CentralProjection({false, false, false}));
  auto h2 = StarHom::embedding({2, 1, 3}, {{1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(kernel_projection(h2), projlat::CentralProjection({false, true, false}));
}

TEST(Lift, IdentityAndTrivialLift) {
  gen::Rng rng(83);
  AlgebraShape s({2, 1});
  auto lifted = lift_Mn(StarHom::identity(s), 3);
  auto x = gen::random_element(rng, fdalg::matrix_algebra(s, 3));
  EXPECT_LE(op_norm(lifted.apply(x) - x), 1e-14);

  auto h = gen::random_star_hom(rng, s);
  auto h1 = lift_Mn(h, 1);
  auto y = gen::random_element(rng, s);
  EXPECT_LE(op_norm(h1.apply(y) - h.apply(y)), 1e-13);
  EXPECT_THROW(lift_Mn(h, 0), InputError);
}

TEST(Lift, TileLevelAction) {
  gen::Rng rng(89);
  for (int t = 0; t < 20; ++t) {
    auto s = gen::random_shape(rng, 3, 3);
    auto h = gen::random_star_hom(rng, s);
    auto n = gen::uniform(rng, 1, 3);
    auto lifted = lift_Mn(h, n);
    auto i = gen::uniform(rng, 0, n - 1), j = gen::uniform(rng, 0, n - 1);
    auto a = gen::random_element(rng, s);
    auto eij = fdalg::matrix_unit(s, n, i, j);
    // e_ij(a): a in tile (i, j), zero elsewhere.
    std::vector<Element> grid(n * n, Element::zero(s));
    grid[i * n + j] = a;
    auto x = fdalg::assemble(n, grid);
    auto img = lifted.apply(x);
    EXPECT_LE(op_norm(fdalg::a_entry(img, n, i, j) - h.apply(a)), 1e-12 * (1 + op_norm(a)));
    EXPECT_LE(op_norm(img - apply_entrywise(h, x, n)), 1e-12 * (1 + op_norm(a)));
    EXPECT_LE(op_norm(lifted.apply(eij) - apply_entrywise(h, eij, n)), 1e-12);
  }
}

TEST(Lift, Functoriality) {
  gen::Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    auto a = gen::random_shape(rng, 2, 3);
    auto g = gen::random_star_hom(rng, a);
    auto h = gen::random_star_hom(rng, g.codomain());
    auto n = gen::uniform(rng, 1, 3);
    auto lhs = lift_Mn(compose(h, g), n);
    auto rhs = compose(lift_Mn(h, n), lift_Mn(g, n));
    auto x = gen::random_element(rng, fdalg::matrix_algebra(a, n));
    EXPECT_LE(op_norm(lhs.apply(x) - rhs.apply(x)), 1e-10 * (1 + op_norm(x)));
  }
}

TEST(SupPreservation, Examples) {
  gen::Rng rng(101);
  AlgebraShape s({2, 3});
  auto h = gen::random_star_hom(rng, s);

  auto p = gen::projection_of_rank(rng, s, {1, 2});
  auto single = check_sup_preservation(h, {p}, true);
  EXPECT_TRUE(single.preserved);
  EXPECT_EQ(single.rank_image_of_sup, single.rank_sup_of_images);

  // Diagonal orthogonal family: the sup is the entrywise sum.
  Element d1 = Element::zero(s), d2 = Element::zero(s);
  d1.block(0)(0, 0) = 1;
  d2.block(0)(1, 1) = 1;
  d2.block(1)(2, 2) = 1;
  auto orth = check_sup_preservation(h, {d1, d2}, true);
  EXPECT_TRUE(orth.preserved);
  EXPECT_LE(orth.defect, 1e-9);
  EXPECT_EQ(orth.rank_image_of_sup, projlat::rank_vector(h.apply(d1 + d2)));

  for (int t = 0; t < 10; ++t) {
    auto fam = gen::arbitrary_family(rng, s, 3);
    auto r = check_sup_preservation(h, fam, false);
    EXPECT_TRUE(r.preserved);
    EXPECT_LE(r.defect, 1e-9);
  }
}

TEST(SupPreservation, Errors) {
  auto h = StarHom::identity({2});
  Element notproj({2}, {Matrix::Constant(2, 2, 1.0)});
  EXPECT_THROW(check_sup_preservation(h, {notproj}, false), InputError);
  EXPECT_THROW(check_sup_preservation(h, {}, false), InputError);
  Element p = Element::identity({2});
  EXPECT_THROW(check_sup_preservation(h, {p, p}, true), InputError);
}

}  // namespace
}  // namespace awstar::functor
