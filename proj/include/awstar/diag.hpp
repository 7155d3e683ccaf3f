#pragma once

// Simultaneous diagonalization of a commuting family of normal elements of
// M_n(A) by a unitary of M_n(A).
//
// The route: a masa C containing the family; an equipartition f_1..f_n of C
// into equivalent projections; partial isometries v_j from f_j onto the
// diagonal A-units e_jj; u = sum_j v_j. Since every member commutes with
// each f_j, u x u* is supported on the tiles e_jj x e_jj.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <vector>

#include "awstar/fdalg.hpp"
#include "awstar/masa.hpp"
#include "awstar/projlat.hpp"

namespace awstar::diag {

using fdalg::AlgebraShape;
using fdalg::Element;
using fdalg::Matrix;
using fdalg::Tolerance;

struct MemberReport {
  double off_diagonal = 0.0;  // max op_norm of an off-diagonal A-entry of u x u*
  double roundtrip = 0.0;     // op_norm(u* (u x u*) u - x)
};

struct DiagonalizationResult {
  Element u;
  std::vector<Element> diagonalized;
  std::vector<MemberReport> members;
  double unitarity_defect = 0.0;  // max(|uu* - 1|, |u*u - 1|)
  double scale = 1.0;
};

struct ADiagonalCheck {
  bool diagonal;
  double residual;  // max op_norm over off-diagonal A-entries
};

/// Whether every off-diagonal A-entry of x in M_n(A) is negligible.
inline ADiagonalCheck is_a_diagonal(const Element& x, std::size_t n,
                                    const Tolerance& tol = {}) {
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r = std::max(r, fdalg::op_norm(fdalg::a_entry(x, n, i, j)));
  return {r <= tol.eps_struct * (1.0 + fdalg::op_norm(x)), r};
}

/// The diagonal A-unit e_jj of M_n(A).
inline Element diagonal_unit(const AlgebraShape& base, std::size_t n,
                             std::size_t j) {
  return fdalg::matrix_unit(base, n, j, j);
}

inline DiagonalizationResult simultaneous_diagonalize(
    const AlgebraShape& base, std::size_t n, const std::vector<Element>& family,
    const Tolerance& tol = {}) {
  if (n == 0) throw InputError("n must be positive");
  const auto big = fdalg::matrix_algebra(base, n);

  auto js = masa::joint_spectral(family, big, tol);
  const auto& c = js.masa;
  const double scale = js.scale;

  auto groups = masa::equipartition_columns(big, n);
  const auto one = Element::identity(big);
  Element u = Element::zero(big);
  for (std::size_t j = 0; j < n; ++j) {
    auto f = c.projection(groups[j]);
    auto e = diagonal_unit(base, n, j);
    if (!projlat::equivalent(f, e, tol)) {
      std::ostringstream msg;
      msg << "equipartition piece " << j << " is not equivalent to e_" << j << j;
      throw InvariantError(msg.str());
    }
    // Source basis: the masa columns of f_j, so the frame is carried onto the
    // standard basis of tile j. Target basis: the standard basis of tile j.
    std::vector<Matrix> src, dst;
    for (std::size_t k = 0; k < big.num_blocks(); ++k) {
      const auto nk = static_cast<Eigen::Index>(big[k]);
      const auto t = static_cast<Eigen::Index>(base[k]);
      const auto& cols = groups[j][k];
      Matrix s(nk, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t i = 0; i < cols.size(); ++i)
        s.col(static_cast<Eigen::Index>(i)) =
            c.frame(k).col(static_cast<Eigen::Index>(cols[i]));
      src.push_back(std::move(s));
      dst.push_back(Matrix::Identity(nk, nk).middleCols(static_cast<Eigen::Index>(j) * t, t));
    }
    auto v = projlat::partial_isometry_from_bases(big, src, dst);
    if (fdalg::op_norm(fdalg::adjoint(v) * v - f) > tol.eps_struct ||
        fdalg::op_norm(v * fdalg::adjoint(v) - e) > tol.eps_struct)
      throw InvariantError("partial isometry " + std::to_string(j) +
                           " does not connect f_j to e_jj");
    u = u + v;
  }

  DiagonalizationResult out;
  out.scale = scale;
  out.unitarity_defect =
      std::max(fdalg::op_norm(u * fdalg::adjoint(u) - one),
               fdalg::op_norm(fdalg::adjoint(u) * u - one));
  for (const auto& x : family) {
    auto y = u * x * fdalg::adjoint(u);
    MemberReport rep;
    rep.off_diagonal = is_a_diagonal(y, n, tol).residual;
    rep.roundtrip = fdalg::op_norm(fdalg::adjoint(u) * y * u - x);
    if (rep.off_diagonal > tol.eps_struct * scale) {
      std::ostringstream msg;
      msg << "conjugated member is not A-diagonal, residual " << rep.off_diagonal;
      throw InvariantError(msg.str());
    }
    out.diagonalized.push_back(std::move(y));
    out.members.push_back(rep);
  }
  if (out.unitarity_defect > tol.eps_struct)
    throw InvariantError("constructed u is not unitary");
  out.u = std::move(u);
  return out;
}

}  // namespace awstar::diag
