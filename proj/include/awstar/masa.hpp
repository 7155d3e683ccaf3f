#pragma once

// Maximal abelian subalgebras of finite-dimensional C*-algebras.
//
// In M_m(C) every masa is unitarily conjugate to the diagonal algebra, so a
// masa is stored as one unitary frame per block; its minimal projections are
// the rank-one projections onto the frame columns.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "awstar/fdalg.hpp"
#include "awstar/projlat.hpp"

namespace awstar::masa {

using fdalg::AlgebraShape;
using fdalg::Complex;
using fdalg::Element;
using fdalg::Matrix;
using fdalg::Tolerance;

/// Joint eigenvalues of one minimal projection, one per family member.
using SpectralLabel = std::vector<Complex>;

/// Lexicographic order on labels: real part, then imaginary part, coordinate
/// by coordinate.
inline bool label_less(const SpectralLabel& a, const SpectralLabel& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return a.size() < b.size();
}

class Masa {
 public:
  Masa() = default;
  Masa(AlgebraShape shape, std::vector<Matrix> frames,
       std::vector<std::vector<SpectralLabel>> labels)
      : shape_(std::move(shape)),
        frames_(std::move(frames)),
        labels_(std::move(labels)) {
    if (frames_.size() != shape_.num_blocks() ||
        labels_.size() != shape_.num_blocks())
      throw InputError("masa frames/labels do not match the shape");
    for (std::size_t k = 0; k < frames_.size(); ++k) {
      auto n = static_cast<Eigen::Index>(shape_[k]);
      if (frames_[k].rows() != n || frames_[k].cols() != n)
        throw InputError("masa frame " + std::to_string(k) + " has wrong size");
      if (labels_[k].size() != shape_[k])
        throw InputError("masa block " + std::to_string(k) + " needs one label per column");
    }
  }

  /// The diagonal masa.
  static Masa diagonal(const AlgebraShape& s) {
    std::vector<Matrix> f;
    std::vector<std::vector<SpectralLabel>> l;
    for (auto n : s.blocks()) {
      f.push_back(Matrix::Identity(n, n));
      l.emplace_back(n);
    }
    return {s, std::move(f), std::move(l)};
  }

  const AlgebraShape& shape() const { return shape_; }
  const Matrix& frame(std::size_t k) const { return frames_[k]; }
  const std::vector<Matrix>& frames() const { return frames_; }
  const std::vector<SpectralLabel>& labels(std::size_t k) const { return labels_[k]; }

  /// The frame as a unitary element of the algebra.
  Element unitary() const { return {shape_, frames_}; }

  /// Rank-one projection onto column c of block k.
  Element minimal_projection(std::size_t k, std::size_t c) const {
    auto p = Element::zero(shape_);
    auto col = frames_[k].col(static_cast<Eigen::Index>(c));
    p.block(k) = col * col.adjoint();
    return p;
  }

  /// Sum of the minimal projections selected per block.
  Element projection(const std::vector<std::vector<std::size_t>>& columns) const {
    auto p = Element::zero(shape_);
    for (std::size_t k = 0; k < columns.size(); ++k)
      for (auto c : columns[k]) {
        auto col = frames_[k].col(static_cast<Eigen::Index>(c));
        p.block(k) += col * col.adjoint();
      }
    return p;
  }

  /// x expressed in frame coordinates, F* x F per block.
  Element in_frame(const Element& x) const {
    fdalg::require_same_shape(unitary(), x);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < frames_.size(); ++k)
      out.push_back(frames_[k].adjoint() * x.block(k) * frames_[k]);
    return {shape_, std::move(out)};
  }

 private:
  AlgebraShape shape_;
  std::vector<Matrix> frames_;
  std::vector<std::vector<SpectralLabel>> labels_;
};

/// Largest off-diagonal magnitude of x in the masa's frame coordinates.
inline double off_diagonal_residual(const Masa& m, const Element& x) {
  auto y = m.in_frame(x);
  double r = 0.0;
  for (const auto& b : y.blocks())
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (i != j) r = std::max(r, std::abs(b(i, j)));
  return r;
}

namespace detail {

// Splits ascending eigenvalues into single-linkage clusters: consecutive
// values closer than `gap` share a cluster.
inline std::vector<std::vector<Eigen::Index>> cluster(const Eigen::VectorXd& ev,
                                                      double gap) {
  std::vector<std::vector<Eigen::Index>> out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (out.empty() || ev(i) - ev(i - 1) > gap) out.emplace_back();
    out.back().push_back(i);
  }
  return out;
}

// Refines the orthonormal columns of `basis` through the Hermitian operators
// ops[depth..], appending joint eigenvectors to `out`.
inline void refine(const Matrix& basis, const std::vector<Matrix>& ops,
                   std::size_t depth, double gap, std::vector<Matrix>& out) {
  if (basis.cols() <= 1 || depth == ops.size()) {
    // Leftover multiplicity: any orthonormal basis of the joint eigenspace
    // completes the masa; keep the one we have.
    out.push_back(basis);
    return;
  }
  Matrix h = basis.adjoint() * ops[depth] * basis;
  h = (h + h.adjoint()).eval() * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw InvariantError("eigensolver failed");
  for (const auto& c : cluster(es.eigenvalues(), gap)) {
    Matrix sub(basis.cols(), static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      sub.col(static_cast<Eigen::Index>(i)) = es.eigenvectors().col(c[i]);
    refine(basis * sub, ops, depth + 1, gap, out);
  }
}

}  // namespace detail

struct JointSpectralResult {
  Masa masa;
  double scale = 1.0;  // 1 + max member norm
};

/// Builds a masa containing a commuting family of normal elements by
/// recursive joint eigenspace refinement, block by block.
inline JointSpectralResult joint_spectral(const std::vector<Element>& family,
                                          const AlgebraShape& shape,
                                          const Tolerance& tol = {}) {
  tol.validate();
  double max_norm = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].shape() != shape)
      throw InputError("family member " + std::to_string(i) + " has shape " +
                       family[i].shape().str() + ", expected " + shape.str());
    if (!fdalg::is_normal(family[i], tol))
      throw InputError("not normal: family member " + std::to_string(i));
    max_norm = std::max(max_norm, fdalg::op_norm(family[i]));
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!fdalg::commutes(family[i], family[j], tol)) {
        std::ostringstream msg;
        msg << "not commuting: members " << i << " and " << j
            << ", commutator norm " << fdalg::commutator_norm(family[i], family[j]);
        throw InputError(msg.str());
      }
  const double scale = 1.0 + max_norm;
  const double gap = tol.eps_cluster * scale;

  std::vector<Matrix> frames;
  std::vector<std::vector<SpectralLabel>> labels;
  for (std::size_t k = 0; k < shape.num_blocks(); ++k) {
    auto n = static_cast<Eigen::Index>(shape[k]);
    // A normal x is determined by its commuting Hermitian parts.
    std::vector<Matrix> ops;
    for (const auto& x : family) {
      const Matrix& b = x.block(k);
      ops.push_back((b + b.adjoint()) * 0.5);
      ops.push_back((b - b.adjoint()) * Complex(0.0, -0.5));
    }
    std::vector<Matrix> pieces;
    detail::refine(Matrix::Identity(n, n), ops, 0, gap, pieces);

    std::vector<Eigen::VectorXcd> cols;
    for (const auto& p : pieces)
      for (Eigen::Index c = 0; c < p.cols(); ++c) cols.push_back(p.col(c));
    std::vector<SpectralLabel> col_labels;
    for (const auto& v : cols) {
      SpectralLabel l;
      for (const auto& x : family) l.push_back(v.dot(x.block(k) * v));
      col_labels.push_back(std::move(l));
    }
    std::vector<std::size_t> order(cols.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return label_less(col_labels[a], col_labels[b]);
    });
    Matrix frame(n, n);
    std::vector<SpectralLabel> sorted;
    for (Eigen::Index c = 0; c < n; ++c) {
      frame.col(c) = cols[order[static_cast<std::size_t>(c)]];
      sorted.push_back(col_labels[order[static_cast<std::size_t>(c)]]);
    }
    projlat::normalize_phases(frame);
    frames.push_back(std::move(frame));
    labels.push_back(std::move(sorted));
  }
  Masa m(shape, std::move(frames), std::move(labels));
  for (std::size_t i = 0; i < family.size(); ++i) {
    double r = off_diagonal_residual(m, family[i]);
    if (r > tol.eps_struct * scale) {
      std::ostringstream msg;
      msg << "joint_spectral left member " << i
          << " non-diagonal, residual " << r;
      throw InvariantError(msg.str());
    }
  }
  return {std::move(m), scale};
}

/// One minimal projection of the masa with its label.
struct MinimalProjection {
  std::size_t block;
  std::size_t column;
  Element projection;
  SpectralLabel label;
};

/// The rank-one minimal projections, block by block in frame order. Each is
/// abelian with central cover its block.
inline std::vector<MinimalProjection> abelian_frame(const Masa& m) {
  std::vector<MinimalProjection> out;
  for (std::size_t k = 0; k < m.shape().num_blocks(); ++k)
    for (std::size_t c = 0; c < m.shape()[k]; ++c)
      out.push_back({k, c, m.minimal_projection(k, c), m.labels(k)[c]});
  return out;
}

inline bool divisibility_check(const AlgebraShape& s, std::size_t n) {
  if (n == 0) return false;
  for (auto m : s.blocks())
    if (m % n != 0) return false;
  return true;
}

/// Column indices of each of the n equipartition groups, per block:
/// round-robin over frame order (which is label order).
inline std::vector<std::vector<std::vector<std::size_t>>> equipartition_columns(
    const AlgebraShape& s, std::size_t n) {
  if (n == 0) throw InputError("equipartition needs n >= 1");
  for (auto m : s.blocks())
    if (m % n != 0)
      throw InputError(std::to_string(m) + " not divisible by " +
                       std::to_string(n) +
                       ": a type I_m summand splits into n equivalent "
                       "orthogonal projections with sum 1 only when n | m");
  std::vector<std::vector<std::vector<std::size_t>>> groups(
      n, std::vector<std::vector<std::size_t>>(s.num_blocks()));
  for (std::size_t k = 0; k < s.num_blocks(); ++k)
    for (std::size_t c = 0; c < s[k]; ++c) groups[c % n][k].push_back(c);
  return groups;
}

/// n pairwise orthogonal projections of the masa, summing to 1, with equal
/// rank vectors.
inline std::vector<Element> equipartition(const Masa& m, std::size_t n) {
  std::vector<Element> out;
  for (const auto& g : equipartition_columns(m.shape(), n))
    out.push_back(m.projection(g));
  return out;
}

/// A projection e of the masa with rank floor(n_k/2) in every block, so that
/// c(e) = c(1-e) = 1 and e is subequivalent to 1-e.
inline Element halving(const Masa& m) {
  std::vector<std::vector<std::size_t>> cols(m.shape().num_blocks());
  for (std::size_t k = 0; k < m.shape().num_blocks(); ++k) {
    if (m.shape()[k] < 2)
      throw InputError("abelian central summand: block " + std::to_string(k) +
                       " has size 1");
    for (std::size_t c = 0; c < m.shape()[k] / 2; ++c) cols[k].push_back(c);
  }
  return m.projection(cols);
}

}  // namespace awstar::masa
