#pragma once

// Seeded random instances: Haar unitaries, projections of given rank,
// commuting normal families with a known diagonalizing unitary, random
// *-homomorphisms, and random atomic models.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "awstar/cardinal.hpp"
#include "awstar/dimension.hpp"
#include "awstar/fdalg.hpp"
#include "awstar/functor.hpp"

namespace awstar::gen {

using fdalg::AlgebraShape;
using fdalg::Complex;
using fdalg::Element;
using fdalg::Matrix;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Matrix gaussian(Rng& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> nd;
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(nd(rng), nd(rng));
  return m;
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
inline Matrix haar_unitary(Rng& rng, Eigen::Index n) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(rng, n, n));
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    double a = std::abs(r(i, i));
    if (a > 0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

inline Element random_unitary(Rng& rng, const AlgebraShape& s) {
  std::vector<Matrix> b;
  for (auto n : s.blocks()) b.push_back(haar_unitary(rng, static_cast<Eigen::Index>(n)));
  return {s, std::move(b)};
}

inline Element random_element(Rng& rng, const AlgebraShape& s) {
  std::vector<Matrix> b;
  for (auto n : s.blocks()) {
    auto m = static_cast<Eigen::Index>(n);
    b.push_back(gaussian(rng, m, m));
  }
  return {s, std::move(b)};
}

/// Random complex number with small integer-ish real and imaginary parts,
/// drawn from a short list so that repeated eigenvalues occur often.
inline Complex random_eigenvalue(Rng& rng, bool hermitian) {
  static constexpr double kVals[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 3.0};
  auto pick = [&] { return kVals[uniform(rng, 0, std::size(kVals) - 1)]; };
  return {pick(), hermitian ? 0.0 : pick()};
}

/// W diag(1,..,1,0,..,0) W* with the given rank per block.
inline Element projection_of_rank(Rng& rng, const AlgebraShape& s,
                                  const std::vector<std::size_t>& rank) {
  std::vector<Matrix> b;
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    auto n = static_cast<Eigen::Index>(s[k]);
    Matrix w = haar_unitary(rng, n);
    Matrix cols = w.leftCols(static_cast<Eigen::Index>(rank[k]));
    b.push_back(cols * cols.adjoint());
  }
  return {s, std::move(b)};
}

inline std::vector<std::size_t> random_rank(Rng& rng, const AlgebraShape& s) {
  std::vector<std::size_t> r;
  for (auto n : s.blocks()) r.push_back(uniform(rng, 0, n));
  return r;
}

/// `count` pairwise orthogonal projections: disjoint column sets of one Haar
/// unitary per block.
inline std::vector<Element> orthogonal_family(Rng& rng, const AlgebraShape& s,
                                              std::size_t count) {
  std::vector<Element> out(count, Element::zero(s));
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    auto n = static_cast<Eigen::Index>(s[k]);
    Matrix w = haar_unitary(rng, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      // Columns left unassigned keep the family's sup below 1 sometimes.
      auto who = uniform(rng, 0, count);
      if (who == count) continue;
      out[who].block(k) += w.col(c) * w.col(c).adjoint();
    }
  }
  return out;
}

inline std::vector<Element> arbitrary_family(Rng& rng, const AlgebraShape& s,
                                             std::size_t count) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(projection_of_rank(rng, s, random_rank(rng, s)));
  return out;
}

/// A commuting family x_i = w d_i w* in M_n(A): the d_i are A-diagonal, each
/// diagonal A-entry sharing one eigenbasis across the family.
struct CommutingInstance {
  AlgebraShape base;
  std::size_t n;
  Element w;
  std::vector<Element> d;
  std::vector<Element> family;
};

inline CommutingInstance commuting_family(Rng& rng, const AlgebraShape& base, std::size_t n,
                                          std::size_t members) {
  auto big = fdalg::matrix_algebra(base, n);
  // Eigenbasis per diagonal tile, per block.
  std::vector<std::vector<Matrix>> tiles(n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto t : base.blocks()) tiles[j].push_back(haar_unitary(rng, static_cast<Eigen::Index>(t)));
  CommutingInstance inst{base, n, random_unitary(rng, big), {}, {}};
  for (std::size_t i = 0; i < members; ++i) {
    bool hermitian = uniform(rng, 0, 1) == 0;
    auto d = Element::zero(big);
    for (std::size_t k = 0; k < base.num_blocks(); ++k) {
      auto t = static_cast<Eigen::Index>(base[k]);
      for (std::size_t j = 0; j < n; ++j) {
        Eigen::VectorXcd ev(t);
        for (Eigen::Index a = 0; a < t; ++a) ev(a) = random_eigenvalue(rng, hermitian);
        const auto& q = tiles[j][k];
        d.block(k).block(static_cast<Eigen::Index>(j) * t, static_cast<Eigen::Index>(j) * t, t, t) =
            q * ev.asDiagonal() * q.adjoint();
      }
    }
    inst.family.push_back(inst.w * d * fdalg::adjoint(inst.w));
    inst.d.push_back(std::move(d));
  }
  return inst;
}

inline AlgebraShape random_shape(Rng& rng, std::size_t max_blocks, std::size_t max_size) {
  std::vector<std::size_t> b(uniform(rng, 1, max_blocks));
  for (auto& n : b) n = uniform(rng, 1, max_size);
  return AlgebraShape(std::move(b));
}

/// Random unital *-homomorphism out of `domain`: 1 to 3 codomain blocks,
/// multiplicities in {0,1,2} with no zero row, Haar conjugators.
inline functor::StarHom random_star_hom(Rng& rng, const AlgebraShape& domain,
                                        std::size_t max_mult = 2) {
  std::size_t rows = uniform(rng, 1, 3);
  functor::Multiplicities mult(rows, std::vector<std::size_t>(domain.num_blocks()));
  std::vector<std::size_t> sizes;
  for (auto& row : mult) {
    std::size_t total = 0;
    do {
      total = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        row[k] = uniform(rng, 0, max_mult);
        total += row[k] * domain[k];
      }
    } while (total == 0);
    sizes.push_back(total);
  }
  std::vector<Matrix> conj;
  for (auto m : sizes) conj.push_back(haar_unitary(rng, static_cast<Eigen::Index>(m)));
  return {domain, AlgebraShape(sizes), std::move(mult), std::move(conj)};
}

inline dimension::AtomicModel random_model(Rng& rng, std::size_t max_atoms,
                                           std::uint64_t max_index) {
  std::vector<Cardinal> atoms(uniform(rng, 1, max_atoms));
  for (auto& a : atoms) a = Cardinal::aleph(uniform(rng, 0, max_index));
  return dimension::AtomicModel(std::move(atoms));
}

/// Random zero-or-properly-infinite projection of the model.
inline dimension::CProjection random_cprojection(Rng& rng, const dimension::AtomicModel& m) {
  std::vector<Cardinal> mu, nu;
  for (const auto& k : m.atoms()) {
    auto pick = uniform(rng, 0, k.value() + 1);
    auto x = pick == 0 ? Cardinal::finite(0) : Cardinal::aleph(pick - 1);
    mu.push_back(x);
    nu.push_back(x < k ? k : Cardinal::aleph(uniform(rng, 0, k.value())));
  }
  return {m, std::move(mu), std::move(nu)};
}

}  // namespace awstar::gen
