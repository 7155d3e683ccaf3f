#include "awstar/diag.hpp"

#include <gtest/gtest.h>

#include "awstar/gen.hpp"

namespace awstar::diag {
namespace {

using fdalg::op_norm;

TEST(IsADiagonal, Examples) {
  auto one = Element::identity({2, 4});
  auto c = is_a_diagonal(one, 2);
  EXPECT_TRUE(c.diagonal);
  EXPECT_EQ(c.residual, 0.0);

  auto e01 = fdalg::matrix_unit({1}, 2, 0, 1);
  auto d = is_a_diagonal(e01, 2);
  EXPECT_FALSE(d.diagonal);
  EXPECT_DOUBLE_EQ(d.residual, 1.0);
}

TEST(Diagonalize, SwapInM2) {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  auto r = simultaneous_diagonalize({1}, 2, {Element({2}, {x})});
  EXPECT_LE(r.unitarity_defect, 1e-12);
  ASSERT_EQ(r.diagonalized.size(), 1u);
  Matrix want = Eigen::Vector2cd(-1, 1).asDiagonal();
  EXPECT_LE((r.diagonalized[0].block(0) - want).norm(), 1e-12);
  EXPECT_LE(r.members[0].off_diagonal, 1e-12);
  EXPECT_LE(r.members[0].roundtrip, 1e-12);
}

TEST(Diagonalize, AlreadyDiagonalFamilyStaysDiagonal) {
  auto x = Element::identity({3});
  x.block(0) = Eigen::Vector3cd(1, 2, 3).asDiagonal();
  auto r = simultaneous_diagonalize({3}, 1, {x});
  EXPECT_LE(r.members[0].off_diagonal, 1e-12);
  EXPECT_LE(r.members[0].roundtrip, 1e-12);
}

TEST(Diagonalize, RandomInstances) {
  gen::Rng rng(61);
  for (int t = 0; t < 40; ++t) {
    auto base = gen::random_shape(rng, 3, 3);
    auto n = gen::uniform(rng, 1, 3);
    auto inst = gen::commuting_family(rng, base, n, gen::uniform(rng, 1, 4));
    auto r = simultaneous_diagonalize(base, n, inst.family);
    EXPECT_LE(r.unitarity_defect, 1e-10);
    for (std::size_t i = 0; i < inst.family.size(); ++i) {
      EXPECT_LE(r.members[i].off_diagonal, 1e-8 * r.scale);
      EXPECT_LE(r.members[i].roundtrip, 1e-10 * r.scale);
      EXPECT_TRUE(is_a_diagonal(r.diagonalized[i], n).diagonal);
    }
  }
}

TEST(Diagonalize, Errors) {
  Matrix j(2, 2);
  j << 0, 1, 0, 0;
  EXPECT_THROW(simultaneous_diagonalize({1}, 2, {Element({2}, {j})}), InputError);
  EXPECT_THROW(simultaneous_diagonalize({1}, 0, {}), InputError);
}

}  // namespace
}  // namespace awstar::diag
