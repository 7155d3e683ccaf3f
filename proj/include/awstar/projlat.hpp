#pragma once

// Projection lattice of a finite-dimensional C*-algebra: Murray-von Neumann
// comparison, central covers, the comparison decomposition, lattice
// operations and corners.
//
// In M_m(C) rank is a complete invariant for equivalence, so every decision
// here is made on integer rank vectors. Partial isometries are constructed
// afterwards and only serve as witnesses.

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "awstar/fdalg.hpp"

namespace awstar::projlat {

using fdalg::AlgebraShape;
using fdalg::Complex;
using fdalg::Element;
using fdalg::Matrix;
using fdalg::Tolerance;

using RankVector = std::vector<std::size_t>;

/// A central projection: each block is either 0 or the identity.
class CentralProjection {
 public:
  CentralProjection() = default;
  explicit CentralProjection(std::vector<bool> flags) : flags_(std::move(flags)) {}

  static CentralProjection none(std::size_t r) { return CentralProjection(std::vector<bool>(r, false)); }
  static CentralProjection all(std::size_t r) { return CentralProjection(std::vector<bool>(r, true)); }

  std::size_t size() const { return flags_.size(); }
  bool operator[](std::size_t k) const { return flags_[k]; }
  const std::vector<bool>& flags() const { return flags_; }
  bool operator==(const CentralProjection&) const = default;

  bool is_zero() const {
    for (bool f : flags_)
      if (f) return false;
    return true;
  }

  Element to_element(const AlgebraShape& s) const {
    if (s.num_blocks() != flags_.size())
      throw InputError("central projection does not match shape " + s.str());
    auto out = Element::zero(s);
    for (std::size_t k = 0; k < flags_.size(); ++k)
      if (flags_[k]) out.block(k).setIdentity();
    return out;
  }

 private:
  std::vector<bool> flags_;
};

inline void require_projection(const Element& p, const Tolerance& tol,
                               const char* what = "argument") {
  if (!fdalg::is_projection(p, tol))
    throw InputError(std::string(what) + " is not a projection");
}

/// Per-block count of singular values above 1/2.
inline RankVector rank_vector(const Element& p, const Tolerance& tol = {}) {
  require_projection(p, tol);
  RankVector r;
  for (const auto& m : p.blocks()) {
    Eigen::JacobiSVD<Matrix> svd(m);
    std::size_t c = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 0.5) ++c;
    r.push_back(c);
  }
  return r;
}

inline bool equivalent(const Element& p, const Element& q,
                       const Tolerance& tol = {}) {
  fdalg::require_same_shape(p, q);
  return rank_vector(p, tol) == rank_vector(q, tol);
}

inline bool subequiv(const RankVector& a, const RankVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline bool subequiv(const Element& p, const Element& q,
                     const Tolerance& tol = {}) {
  fdalg::require_same_shape(p, q);
  return subequiv(rank_vector(p, tol), rank_vector(q, tol));
}

/// p is subequivalent to but not equivalent to q; 0 < 0 holds by convention.
inline bool strict_subequiv(const RankVector& a, const RankVector& b) {
  bool a_zero = true, b_zero = true;
  for (auto x : a) a_zero = a_zero && x == 0;
  for (auto x : b) b_zero = b_zero && x == 0;
  if (a_zero && b_zero) return true;
  return subequiv(a, b) && a != b;
}

inline bool strict_subequiv(const Element& p, const Element& q,
                            const Tolerance& tol = {}) {
  fdalg::require_same_shape(p, q);
  return strict_subequiv(rank_vector(p, tol), rank_vector(q, tol));
}

/// Rotates each column so that its first largest-magnitude entry is real
/// positive.
inline void normalize_phases(Matrix& q) {
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    Eigen::Index best = 0;
    double mag = -1.0;
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
      double a = std::abs(q(i, c));
      if (a > mag + 1e-12) {
        mag = a;
        best = i;
      }
    }
    if (mag <= 0.0) continue;
    q.col(c) *= std::conj(q(best, c) / mag);
  }
}

/// Orthonormal basis of the range of a projection block: column-pivoted QR
/// (largest remaining column first, ties to the lower index), the first
/// `rank` columns, each with its first largest-magnitude entry made real
/// positive.
inline Matrix range_basis(const Matrix& p, std::size_t rank) {
  const auto n = p.rows();
  if (rank == 0) return Matrix(n, 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(p);
  Matrix q = qr.householderQ() * Matrix::Identity(n, static_cast<Eigen::Index>(rank));
  normalize_phases(q);
  return q;
}

/// v = target * source^*: maps the span of `source` isometrically onto the
/// span of `target`, column by column. Both lists are per block with
/// orthonormal columns of matching counts.
inline Element partial_isometry_from_bases(const AlgebraShape& shape,
                                           const std::vector<Matrix>& source,
                                           const std::vector<Matrix>& target) {
  if (source.size() != shape.num_blocks() || target.size() != shape.num_blocks())
    throw InputError("basis lists do not match the shape");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < shape.num_blocks(); ++k) {
    if (source[k].cols() != target[k].cols())
      throw InputError("basis sizes differ in block " + std::to_string(k));
    out.push_back(target[k] * source[k].adjoint());
  }
  return {shape, std::move(out)};
}

/// A partial isometry v with v*v = p and vv* = q.
inline Element partial_isometry(const Element& p, const Element& q,
                                const Tolerance& tol = {}) {
  fdalg::require_same_shape(p, q);
  auto rp = rank_vector(p, tol);
  auto rq = rank_vector(q, tol);
  if (rp != rq) throw InputError("projections are not equivalent");
  std::vector<Matrix> src, dst;
  for (std::size_t k = 0; k < rp.size(); ++k) {
    src.push_back(range_basis(p.block(k), rp[k]));
    dst.push_back(range_basis(q.block(k), rq[k]));
  }
  return partial_isometry_from_bases(p.shape(), src, dst);
}

inline CentralProjection central_cover(const RankVector& r) {
  std::vector<bool> f;
  for (auto x : r) f.push_back(x > 0);
  return CentralProjection(std::move(f));
}

inline CentralProjection central_cover(const Element& p,
                                       const Tolerance& tol = {}) {
  return central_cover(rank_vector(p, tol));
}

/// Central projections x, y, z partitioning 1 with xe < xf, ye ~ yf, ze > zf.
struct ComparisonDecomposition {
  CentralProjection x, y, z;
};

inline ComparisonDecomposition comparison_decomposition(const RankVector& re,
                                                        const RankVector& rf) {
  if (re.size() != rf.size()) throw InputError("rank vectors differ in length");
  std::vector<bool> x(re.size()), y(re.size()), z(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) {
    x[k] = re[k] < rf[k];
    y[k] = re[k] == rf[k];
    z[k] = re[k] > rf[k];
  }
  return {CentralProjection(x), CentralProjection(y), CentralProjection(z)};
}

inline ComparisonDecomposition comparison_decomposition(
    const Element& e, const Element& f, const Tolerance& tol = {}) {
  fdalg::require_same_shape(e, f);
  auto d = comparison_decomposition(rank_vector(e, tol), rank_vector(f, tol));
  // Clauses, checked on the compressed projections themselves.
  const auto& s = e.shape();
  auto xe = d.x.to_element(s) * e, xf = d.x.to_element(s) * f;
  auto ye = d.y.to_element(s) * e, yf = d.y.to_element(s) * f;
  auto ze = d.z.to_element(s) * e, zf = d.z.to_element(s) * f;
  if (!strict_subequiv(xe, xf, tol) || !equivalent(ye, yf, tol) ||
      !strict_subequiv(zf, ze, tol))
    throw InvariantError("comparison decomposition clauses failed");
  return d;
}

/// Orthogonal projection onto the span of the ranges.
inline Element proj_sup(std::span<const Element> family,
                        const Tolerance& tol = {}) {
  if (family.empty()) throw InputError("proj_sup needs a nonempty family (or a shape)");
  for (const auto& p : family) {
    fdalg::require_same_shape(family[0], p);
    require_projection(p, tol, "family member");
  }
  const auto& s = family[0].shape();
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    auto n = static_cast<Eigen::Index>(s[k]);
    Matrix cat(n, n * static_cast<Eigen::Index>(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i)
      cat.middleCols(static_cast<Eigen::Index>(i) * n, n) = family[i].block(k);
    Eigen::JacobiSVD<Matrix> svd(cat, Eigen::ComputeThinU);
    Eigen::Index r = 0;
    while (r < svd.singularValues().size() && svd.singularValues()(r) > 1e-8) ++r;
    Matrix u = svd.matrixU().leftCols(r);
    out.push_back(u * u.adjoint());
  }
  return {s, std::move(out)};
}

inline Element proj_sup(const Element& p, const Element& q,
                        const Tolerance& tol = {}) {
  std::vector<Element> f{p, q};
  return proj_sup(f, tol);
}

/// Projection onto the intersection of the ranges: 1 - sup(1-p, 1-q).
inline Element proj_inf(const Element& p, const Element& q,
                        const Tolerance& tol = {}) {
  fdalg::require_same_shape(p, q);
  auto one = Element::identity(p.shape());
  return one - proj_sup(one - p, one - q, tol);
}

inline bool orthogonal(const Element& p, const Element& q,
                       const Tolerance& tol = {}) {
  return fdalg::op_norm(p * q) <= tol.eps_struct;
}

/// p <= e in the projection order, i.e. ep = p.
inline bool leq(const Element& p, const Element& e, const Tolerance& tol = {}) {
  return fdalg::op_norm(e * p - p) <= tol.eps_struct;
}

/// Corner map a -> e a e.
inline Element compress(const Element& e, const Element& x) { return e * x * e; }

inline bool in_corner(const Element& e, const Element& p,
                      const Tolerance& tol = {}) {
  return fdalg::op_norm(p - compress(e, p)) <= tol.eps_struct;
}

/// The corner eAe as an algebra in its own right: one block of size
/// rank_k(e) for every block where e is nonzero, identified with e_k C^{n_k}
/// through an orthonormal range basis.
class Corner {
 public:
  Corner(const Element& e, const Tolerance& tol = {}) : ambient_(e.shape()) {
    auto r = rank_vector(e, tol);
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] == 0) continue;
      blocks_.push_back(k);
      sizes.push_back(r[k]);
      bases_.push_back(range_basis(e.block(k), r[k]));
    }
    if (sizes.empty()) throw InputError("corner of the zero projection");
    shape_ = AlgebraShape(std::move(sizes));
  }

  const AlgebraShape& shape() const { return shape_; }
  /// Ambient block index of corner block i.
  std::size_t ambient_block(std::size_t i) const { return blocks_[i]; }

  Element restrict(const Element& x) const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      out.push_back(bases_[i].adjoint() * x.block(blocks_[i]) * bases_[i]);
    return {shape_, std::move(out)};
  }

  Element extend(const Element& y) const {
    auto out = Element::zero(ambient_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      out.block(blocks_[i]) = bases_[i] * y.block(i) * bases_[i].adjoint();
    return out;
  }

 private:
  AlgebraShape ambient_;
  AlgebraShape shape_;
  std::vector<std::size_t> blocks_;
  std::vector<Matrix> bases_;
};

/// Groups blocks by size: entry m selects the type I_m summand.
inline std::map<std::size_t, CentralProjection> type_decomposition(
    const AlgebraShape& s) {
  std::map<std::size_t, CentralProjection> out;
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    auto [it, _] = out.try_emplace(s[k], CentralProjection::none(s.num_blocks()));
    auto f = it->second.flags();
    f[k] = true;
    it->second = CentralProjection(std::move(f));
  }
  return out;
}

/// Central cover of p inside the corner eAe, as a projection of A: the
/// blocks of eAe are the blocks k where e is nonzero, and the cover there is
/// e_k when p_k != 0.
inline Element corner_central_cover(const Element& e, const Element& p,
                                    const Tolerance& tol = {}) {
  if (!in_corner(e, p, tol)) throw InputError("projection is not in the corner");
  auto c = central_cover(p, tol);
  auto out = Element::zero(e.shape());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k]) out.block(k) = e.block(k);
  return out;
}

}  // namespace awstar::projlat
