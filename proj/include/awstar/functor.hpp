#pragma once

// Unital *-homomorphisms between finite-dimensional C*-algebras and the
// functor M_n.
//
// Every unital *-homomorphism + M_{n_k} -> + M_{m_l} is, up to a unitary
// per codomain block, the embedding that places c[l][k] copies of x_k down
// the diagonal of block l (k ascending). That data is the representation.

#include <cstddef>
#include <string>
#include <vector>

#include "awstar/fdalg.hpp"
#include "awstar/projlat.hpp"

namespace awstar::functor {

using fdalg::AlgebraShape;
using fdalg::Element;
using fdalg::Matrix;
using fdalg::Tolerance;

using Multiplicities = std::vector<std::vector<std::size_t>>;  // [codomain l][domain k]

class StarHom {
 public:
  StarHom() = default;
  StarHom(AlgebraShape domain, AlgebraShape codomain, Multiplicities mult,
          std::vector<Matrix> conjugators)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        mult_(std::move(mult)),
        conj_(std::move(conjugators)) {
    if (mult_.size() != codomain_.num_blocks() || conj_.size() != codomain_.num_blocks())
      throw InputError("multiplicity rows / conjugators must match codomain blocks");
    for (std::size_t l = 0; l < mult_.size(); ++l) {
      if (mult_[l].size() != domain_.num_blocks())
        throw InputError("multiplicity row " + std::to_string(l) + " has wrong length");
      std::size_t total = 0;
      for (std::size_t k = 0; k < mult_[l].size(); ++k) total += mult_[l][k] * domain_[k];
      if (total != codomain_[l])
        throw InputError("not unital: codomain block " + std::to_string(l) + " has size " +
                         std::to_string(codomain_[l]) + " but receives " +
                         std::to_string(total));
      auto m = static_cast<Eigen::Index>(codomain_[l]);
      if (conj_[l].rows() != m || conj_[l].cols() != m)
        throw InputError("conjugator " + std::to_string(l) + " has wrong size");
      if ((conj_[l] * conj_[l].adjoint() - Matrix::Identity(m, m)).norm() > 1e-8)
        throw InputError("conjugator " + std::to_string(l) + " is not unitary");
    }
  }

  /// Multiplicity embedding with trivial conjugators.
  static StarHom embedding(AlgebraShape domain, Multiplicities mult) {
    std::vector<std::size_t> sizes;
    for (const auto& row : mult) {
      std::size_t t = 0;
      for (std::size_t k = 0; k < row.size(); ++k) t += row[k] * domain[k];
      sizes.push_back(t);
    }
    AlgebraShape cod(sizes);
    std::vector<Matrix> conj;
    for (auto m : sizes) conj.push_back(Matrix::Identity(m, m));
    return {std::move(domain), std::move(cod), std::move(mult), std::move(conj)};
  }

  static StarHom identity(const AlgebraShape& s) {
    Multiplicities c(s.num_blocks(), std::vector<std::size_t>(s.num_blocks(), 0));
    for (std::size_t k = 0; k < s.num_blocks(); ++k) c[k][k] = 1;
    return embedding(s, std::move(c));
  }

  const AlgebraShape& domain() const { return domain_; }
  const AlgebraShape& codomain() const { return codomain_; }
  const Multiplicities& multiplicities() const { return mult_; }
  const std::vector<Matrix>& conjugators() const { return conj_; }

  Element apply(const Element& x) const {
    if (x.shape() != domain_)
      throw InputError("element shape " + x.shape().str() + " is not the domain " +
                       domain_.str());
    std::vector<Matrix> out;
    for (std::size_t l = 0; l < codomain_.num_blocks(); ++l) {
      auto m = static_cast<Eigen::Index>(codomain_[l]);
      Matrix d = Matrix::Zero(m, m);
      Eigen::Index off = 0;
      for (std::size_t k = 0; k < domain_.num_blocks(); ++k) {
        auto nk = static_cast<Eigen::Index>(domain_[k]);
        for (std::size_t c = 0; c < mult_[l][k]; ++c, off += nk)
          d.block(off, off, nk, nk) = x.block(k);
      }
      out.push_back(conj_[l] * d * conj_[l].adjoint());
    }
    return {codomain_, std::move(out)};
  }

 private:
  AlgebraShape domain_, codomain_;
  Multiplicities mult_;
  std::vector<Matrix> conj_;
};

inline Element apply(const StarHom& h, const Element& x) { return h.apply(x); }

namespace detail {

inline Matrix permutation(const std::vector<Eigen::Index>& target_of) {
  auto n = static_cast<Eigen::Index>(target_of.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(i, target_of[static_cast<std::size_t>(i)]) = 1.0;
  return p;
}

// Start offset of copy c of domain block k inside codomain block l under the
// canonical embedding.
inline Eigen::Index canonical_offset(const AlgebraShape& dom, const Multiplicities& mult,
                                     std::size_t l, std::size_t k, std::size_t c) {
  Eigen::Index off = 0;
  for (std::size_t kk = 0; kk < k; ++kk)
    off += static_cast<Eigen::Index>(mult[l][kk] * dom[kk]);
  return off + static_cast<Eigen::Index>(c * dom[k]);
}

}  // namespace detail

/// h after g.
inline StarHom compose(const StarHom& h, const StarHom& g) {
  if (g.codomain() != h.domain())
    throw InputError("cannot compose: " + g.codomain().str() + " vs " + h.domain().str());
  const auto& a = g.domain();
  const auto& b = g.codomain();
  const auto& c = h.codomain();
  Multiplicities m(c.num_blocks(), std::vector<std::size_t>(a.num_blocks(), 0));
  for (std::size_t l = 0; l < c.num_blocks(); ++l)
    for (std::size_t k = 0; k < a.num_blocks(); ++k)
      for (std::size_t j = 0; j < b.num_blocks(); ++j)
        m[l][k] += h.multiplicities()[l][j] * g.multiplicities()[j][k];

  std::vector<Matrix> conj;
  for (std::size_t l = 0; l < c.num_blocks(); ++l) {
    auto size = static_cast<Eigen::Index>(c[l]);
    // Nested order: for each B-block j and each of its copies, the
    // g-conjugated canonical layout of A-blocks. Record, for every nested
    // index, the canonical index of the composite.
    Matrix inner = Matrix::Zero(size, size);
    std::vector<Eigen::Index> target_of(static_cast<std::size_t>(size));
    std::vector<std::size_t> copies_used(a.num_blocks(), 0);
    Eigen::Index pos = 0;
    for (std::size_t j = 0; j < b.num_blocks(); ++j) {
      auto nj = static_cast<Eigen::Index>(b[j]);
      for (std::size_t cj = 0; cj < h.multiplicities()[l][j]; ++cj) {
        inner.block(pos, pos, nj, nj) = g.conjugators()[j];
        for (std::size_t k = 0; k < a.num_blocks(); ++k) {
          auto nk = a[k];
          for (std::size_t ck = 0; ck < g.multiplicities()[j][k]; ++ck) {
            auto canon = detail::canonical_offset(a, m, l, k, copies_used[k]++);
            for (std::size_t s = 0; s < nk; ++s)
              target_of[static_cast<std::size_t>(pos + static_cast<Eigen::Index>(s))] =
                  canon + static_cast<Eigen::Index>(s);
            pos += static_cast<Eigen::Index>(nk);
          }
        }
      }
    }
    // pos walked the nested layout; inner blocks were placed per copy of B_j.
    conj.push_back(h.conjugators()[l] * inner * detail::permutation(target_of));
  }
  return {a, c, std::move(m), std::move(conj)};
}

/// Central projection z with ker(h) = zA: the domain blocks h sends to 0.
inline projlat::CentralProjection kernel_projection(const StarHom& h) {
  std::vector<bool> z;
  for (std::size_t k = 0; k < h.domain().num_blocks(); ++k) {
    bool killed = true;
    for (const auto& row : h.multiplicities()) killed = killed && row[k] == 0;
    z.push_back(killed);
  }
  return projlat::CentralProjection(std::move(z));
}

/// M_n(h): M_n(A) -> M_n(B), h applied entrywise.
inline StarHom lift_Mn(const StarHom& h, std::size_t n) {
  if (n == 0) throw InputError("lift_Mn needs n >= 1");
  const auto& a = h.domain();
  auto big_a = fdalg::matrix_algebra(a, n);
  auto big_b = fdalg::matrix_algebra(h.codomain(), n);
  const auto& mult = h.multiplicities();
  std::vector<Matrix> conj;
  for (std::size_t l = 0; l < h.codomain().num_blocks(); ++l) {
    auto ml = static_cast<Eigen::Index>(h.codomain()[l]);
    auto size = static_cast<Eigen::Index>(n) * ml;
    // Tile layout index i*m_l + o + s  <->  canonical index n*o + i*n_k + s,
    // where o is the offset of a copy of x_k within a B-block.
    std::vector<Eigen::Index> target_of(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < a.num_blocks(); ++k)
        for (std::size_t c = 0; c < mult[l][k]; ++c) {
          auto o = detail::canonical_offset(a, mult, l, k, c);
          auto nk = static_cast<Eigen::Index>(a[k]);
          for (Eigen::Index s = 0; s < nk; ++s)
            target_of[static_cast<std::size_t>(static_cast<Eigen::Index>(i) * ml + o + s)] =
                static_cast<Eigen::Index>(n) * o + static_cast<Eigen::Index>(i) * nk + s;
        }
    Matrix amp = Matrix::Zero(size, size);
    for (std::size_t i = 0; i < n; ++i)
      amp.block(static_cast<Eigen::Index>(i) * ml, static_cast<Eigen::Index>(i) * ml, ml, ml) =
          h.conjugators()[l];
    conj.push_back(amp * detail::permutation(target_of));
  }
  return {big_a, big_b, mult, std::move(conj)};
}

/// h applied entry by entry to an element of M_n(A), for cross-checking
/// lift_Mn.
inline Element apply_entrywise(const StarHom& h, const Element& x, std::size_t n) {
  std::vector<Element> grid;
  for (const auto& e : fdalg::a_entries(x, n)) grid.push_back(h.apply(e));
  return fdalg::assemble(n, grid);
}

struct SupReport {
  projlat::RankVector rank_image_of_sup;  // rank of h(sup F)
  projlat::RankVector rank_sup_of_images; // rank of sup h(F)
  double defect = 0.0;                    // op_norm(h(sup F) - sup h(F))
  bool preserved = false;
};

inline SupReport check_sup_preservation(const StarHom& h, const std::vector<Element>& family,
                                        bool orthogonal_only, const Tolerance& tol = {}) {
  if (family.empty()) throw InputError("empty projection family");
  for (std::size_t i = 0; i < family.size(); ++i) {
    projlat::require_projection(family[i], tol, "family member");
    if (family[i].shape() != h.domain()) throw InputError("family member not over the domain");
  }
  if (orthogonal_only)
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j)
        if (!projlat::orthogonal(family[i], family[j], tol))
          throw InputError("family members " + std::to_string(i) + " and " +
                           std::to_string(j) + " are not orthogonal");
  auto image_of_sup = h.apply(projlat::proj_sup(family, tol));
  std::vector<Element> images;
  for (const auto& p : family) images.push_back(h.apply(p));
  auto sup_of_images = projlat::proj_sup(images, tol);
  SupReport r;
  r.rank_image_of_sup = projlat::rank_vector(image_of_sup, tol);
  r.rank_sup_of_images = projlat::rank_vector(sup_of_images, tol);
  r.defect = fdalg::op_norm(image_of_sup - sup_of_images);
  r.preserved = r.defect <= tol.eps_struct;
  return r;
}

}  // namespace awstar::functor
