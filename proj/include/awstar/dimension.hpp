#pragma once

// Dimension theory of properly infinite projections in atomic models
// B(H_1) + ... + B(H_r) with infinite dim H_i = kappa_i.
//
// The center is discrete: a central projection is a set of atoms, and a
// projection is recorded by the dimensions of its range (mu) and of its
// complement's range (nu) on every atom. Comparison in B(H) is comparison of
// range dimensions, so everything reduces to cardinal arithmetic per atom.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "awstar/cardinal.hpp"
#include "awstar/error.hpp"

namespace awstar::dimension {

using CentralFlags = std::vector<bool>;

class AtomicModel {
 public:
  AtomicModel() = default;
  explicit AtomicModel(std::vector<Cardinal> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InputError("atomic model needs at least one atom");
    for (const auto& k : atoms_)
      if (!k.is_infinite())
        throw InputError("atom dimension " + k.str() + " is not infinite");
  }

  std::size_t size() const { return atoms_.size(); }
  const Cardinal& operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Cardinal>& atoms() const { return atoms_; }
  bool operator==(const AtomicModel&) const = default;

 private:
  std::vector<Cardinal> atoms_;
};

/// A projection of the model, by range and corange dimension per atom.
class CProjection {
 public:
  CProjection() = default;
  CProjection(AtomicModel model, std::vector<Cardinal> mu, std::vector<Cardinal> nu)
      : model_(std::move(model)), mu_(std::move(mu)), nu_(std::move(nu)) {
    if (mu_.size() != model_.size() || nu_.size() != model_.size())
      throw InputError("projection dimensions do not match the model");
    for (std::size_t i = 0; i < mu_.size(); ++i)
      if (add(mu_[i], nu_[i]) != model_[i])
        throw InputError("atom " + std::to_string(i) + ": " + mu_[i].str() +
                         " + " + nu_[i].str() + " != " + model_[i].str());
  }

  /// Range dimensions mu with the complement chosen as kappa where mu < kappa
  /// and 0 where mu = kappa.
  static CProjection with_range(const AtomicModel& m, std::vector<Cardinal> mu) {
    if (mu.size() != m.size()) throw InputError("projection dimensions do not match the model");
    std::vector<Cardinal> nu;
    for (std::size_t i = 0; i < mu.size(); ++i)
      nu.push_back(mu[i] < m[i] ? m[i] : Cardinal::finite(0));
    return {m, std::move(mu), std::move(nu)};
  }

  static CProjection zero(const AtomicModel& m) {
    return {m, std::vector<Cardinal>(m.size(), Cardinal::finite(0)), m.atoms()};
  }
  static CProjection one(const AtomicModel& m) {
    return {m, m.atoms(), std::vector<Cardinal>(m.size(), Cardinal::finite(0))};
  }

  const AtomicModel& model() const { return model_; }
  const std::vector<Cardinal>& mu() const { return mu_; }
  const std::vector<Cardinal>& nu() const { return nu_; }
  bool operator==(const CProjection&) const = default;

  bool is_zero() const {
    return std::all_of(mu_.begin(), mu_.end(), [](auto c) { return c.is_zero(); });
  }

  /// 1 - e.
  CProjection complement() const { return {model_, nu_, mu_}; }

 private:
  AtomicModel model_;
  std::vector<Cardinal> mu_, nu_;
};

inline void require_same_model(const CProjection& e, const CProjection& f) {
  if (e.model() != f.model()) throw InputError("projections live in different models");
}

/// Every atom piece is zero or infinite, and e is nonzero.
inline bool is_properly_infinite(const CProjection& e) {
  if (e.is_zero()) return false;
  for (const auto& m : e.mu())
    if (!m.is_zero() && m.is_finite()) return false;
  return true;
}

inline bool equivalent(const CProjection& e, const CProjection& f) {
  require_same_model(e, f);
  return e.mu() == f.mu();
}

inline bool subequiv(const CProjection& e, const CProjection& f) {
  require_same_model(e, f);
  for (std::size_t i = 0; i < e.mu().size(); ++i)
    if (e.mu()[i] > f.mu()[i]) return false;
  return true;
}

inline CentralFlags central_cover(const CProjection& e) {
  CentralFlags c;
  for (const auto& m : e.mu()) c.push_back(!m.is_zero());
  return c;
}

/// ze for a central projection z given by atom flags.
inline CProjection cut(const CentralFlags& z, const CProjection& e) {
  if (z.size() != e.model().size()) throw InputError("central flags do not match the model");
  auto mu = e.mu();
  auto nu = e.nu();
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!z[i]) {
      mu[i] = Cardinal::finite(0);
      nu[i] = e.model()[i];
    }
  return {e.model(), std::move(mu), std::move(nu)};
}

inline void require_dimension_domain(const CProjection& e) {
  if (!e.is_zero() && !is_properly_infinite(e))
    throw InputError("projection is neither zero nor properly infinite");
}

/// d(e): successor of the smallest nonzero atom dimension; d(0) = 0.
///
/// On one atom with infinite range dimension mu, orthogonal families of
/// copies of e summing to e exist in every size up to mu (mu * mu = mu) and
/// in no larger size, so d = mu^+; across atoms d(e) is the minimum of the
/// atomwise values.
inline Cardinal dim_d(const CProjection& e) {
  require_dimension_domain(e);
  if (e.is_zero()) return Cardinal::finite(0);
  Cardinal lo = Cardinal::aleph(~std::uint64_t{0});
  for (const auto& m : e.mu())
    if (!m.is_zero()) lo = std::min(lo, m);
  return succ(lo);
}

/// d-bar(e): supremum of d(ze) over nonzero central z <= c(e), attained on
/// single atoms.
inline Cardinal dim_dbar(const CProjection& e) {
  require_dimension_domain(e);
  if (e.is_zero()) return Cardinal::finite(0);
  Cardinal hi = Cardinal::finite(0);
  for (const auto& m : e.mu()) hi = std::max(hi, m);
  return succ(hi);
}

/// The infinite sizes of orthogonal families of copies of e summing to e:
/// aleph_0 up to the predecessor of d(e).
inline std::vector<Cardinal> gamma_sizes(const CProjection& e) {
  if (!is_properly_infinite(e)) throw InputError("projection is not properly infinite");
  auto d = dim_d(e);
  std::vector<Cardinal> out;
  for (std::uint64_t k = 0; k < d.value(); ++k) out.push_back(Cardinal::aleph(k));
  return out;
}

struct Delta {
  Cardinal value;
  bool achieved;  // value is itself a family size
};

/// delta(e) = sup gamma_sizes(e). The supremum is a maximum whenever it is
/// not weakly inaccessible, which no representable cardinal is.
inline Delta delta(const CProjection& e) {
  auto g = gamma_sizes(e);
  auto v = sup(g);
  return {v, std::find(g.begin(), g.end(), v) != g.end()};
}

/// d(ze) is the same for every nonzero central z <= c(e); 0 counts.
inline bool is_equidimensional(const CProjection& e) {
  std::vector<Cardinal> seen;
  for (const auto& m : e.mu())
    if (!m.is_zero()) seen.push_back(m);
  return std::all_of(seen.begin(), seen.end(), [&](auto c) { return c == seen.front(); });
}

struct EquidimensionalPiece {
  CentralFlags z;
  Cardinal alpha;
};

/// e as the sum of its alpha-equidimensional parts z_alpha e, each z_alpha
/// maximal, in increasing alpha.
inline std::vector<EquidimensionalPiece> equidim_decomposition(const CProjection& e) {
  if (!is_properly_infinite(e)) throw InputError("projection is not properly infinite");
  std::map<Cardinal, CentralFlags> groups;
  for (std::size_t i = 0; i < e.mu().size(); ++i) {
    const auto& m = e.mu()[i];
    if (m.is_zero()) continue;
    auto [it, _] = groups.try_emplace(m, CentralFlags(e.mu().size(), false));
    it->second[i] = true;
  }
  std::vector<EquidimensionalPiece> out;
  for (auto& [m, z] : groups) out.push_back({std::move(z), succ(m)});
  return out;
}

/// D_e per atom: mu_i^+ on the central cover, 0 off it.
inline std::vector<Cardinal> dimension_function(const CProjection& e) {
  require_dimension_domain(e);
  std::vector<Cardinal> out;
  for (const auto& m : e.mu()) out.push_back(m.is_zero() ? m : succ(m));
  return out;
}

/// Pointwise D_e <= D_f, which decides subequivalence.
inline bool compare_by_dimension(const CProjection& e, const CProjection& f) {
  require_same_model(e, f);
  auto de = dimension_function(e);
  auto df = dimension_function(f);
  for (std::size_t i = 0; i < de.size(); ++i)
    if (de[i] > df[i]) return false;
  return true;
}

/// e with e ~ 1 ~ 1 - e: each atom split into two halves of full dimension.
inline CProjection halving(const AtomicModel& m) {
  return {m, m.atoms(), m.atoms()};
}

/// e v f. The complement is kappa where the join does not fill the atom, and
/// otherwise the smaller of the two complements (the complement of the join
/// lies under both).
inline CProjection join(const CProjection& e, const CProjection& f) {
  require_same_model(e, f);
  const auto& m = e.model();
  std::vector<Cardinal> mu, nu;
  for (std::size_t i = 0; i < m.size(); ++i) {
    mu.push_back(std::max(e.mu()[i], f.mu()[i]));
    nu.push_back(mu.back() < m[i] ? m[i] : std::min(e.nu()[i], f.nu()[i]));
  }
  return {m, std::move(mu), std::move(nu)};
}

/// Certificate that 1 splits into a countable family of copies of 1:
/// aleph_0 * kappa_i = kappa_i on every atom.
struct CountableUnits {
  std::vector<Cardinal> certificate;  // mul(aleph_0, kappa_i) per atom
};

using MatrixUnits = std::variant<std::vector<CProjection>, CountableUnits>;

/// An orthogonal family of n copies of 1 summing to 1, for 1 <= n <= aleph_0.
inline MatrixUnits matrix_units(const AtomicModel& m, Cardinal n) {
  if (n.is_zero()) throw InputError("matrix_units needs n >= 1");
  if (n > Cardinal::aleph(0)) throw InputError("beyond model certification: n = " + n.str());
  if (n.is_infinite()) {
    CountableUnits c;
    for (const auto& k : m.atoms()) {
      auto p = mul(n, k);
      if (p != k) throw InvariantError("aleph_0 * kappa != kappa");
      c.certificate.push_back(p);
    }
    return c;
  }
  // n copies of kappa_i fill kappa_i: n * kappa_i = kappa_i.
  for (const auto& k : m.atoms())
    if (mul(n, k) != k) throw InvariantError("n * kappa != kappa");
  std::vector<CProjection> out;
  for (std::uint64_t j = 0; j < n.value(); ++j)
    out.push_back(n.value() == 1 ? CProjection::one(m) : halving(m));
  return out;
}

}  // namespace awstar::dimension
