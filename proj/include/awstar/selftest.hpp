#pragma once

// Desk-scale property suites for every module, run by `awstar selftest`.
// Each case returns pass/fail plus a short detail string; cases are reported
// sorted by name.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "awstar/cardinal.hpp"
#include "awstar/diag.hpp"
#include "awstar/dimension.hpp"
#include "awstar/fdalg.hpp"
#include "awstar/functor.hpp"
#include "awstar/gen.hpp"
#include "awstar/masa.hpp"
#include "awstar/projlat.hpp"

namespace awstar::selftest {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::string detail;
};

/// Collects failures for one case; the first few messages are kept.
class Checker {
 public:
  void expect(bool ok, std::string_view what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) (msgs_ += msgs_.empty() ? "" : "; ") += what;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::string& messages() const { return msgs_; }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string msgs_;
};

using CaseFn = std::function<void(gen::Rng&, const fdalg::Tolerance&, Checker&)>;

namespace detail {

using namespace awstar::fdalg;
using dimension::AtomicModel;
using dimension::CProjection;

inline std::vector<Cardinal> small_cardinals() {
  std::vector<Cardinal> v;
  for (std::uint64_t n = 0; n <= 4; ++n) v.push_back(Cardinal::finite(n));
  for (std::uint64_t k = 0; k <= 4; ++k) v.push_back(Cardinal::aleph(k));
  return v;
}

// Every model with up to `max_atoms` atoms and aleph indices up to `max_index`.
inline std::vector<AtomicModel> all_models(std::size_t max_atoms, std::uint64_t max_index) {
  std::vector<AtomicModel> out;
  std::vector<std::vector<Cardinal>> layer{{}};
  for (std::size_t a = 1; a <= max_atoms; ++a) {
    std::vector<std::vector<Cardinal>> next;
    for (const auto& base : layer)
      for (std::uint64_t k = 0; k <= max_index; ++k) {
        auto v = base;
        v.push_back(Cardinal::aleph(k));
        next.push_back(v);
      }
    for (const auto& v : next) out.emplace_back(v);
    layer = std::move(next);
  }
  return out;
}

// Every projection of the model that is zero or properly infinite, with the
// canonical complement.
inline std::vector<CProjection> all_projections(const AtomicModel& m) {
  std::vector<std::vector<Cardinal>> mus{{}};
  for (const auto& k : m.atoms()) {
    std::vector<std::vector<Cardinal>> next;
    for (const auto& base : mus) {
      auto v = base;
      v.push_back(Cardinal::finite(0));
      next.push_back(v);
      for (std::uint64_t j = 0; j <= k.value(); ++j) {
        v.back() = Cardinal::aleph(j);
        next.push_back(v);
      }
    }
    mus = std::move(next);
  }
  std::vector<CProjection> out;
  for (auto& mu : mus) out.push_back(CProjection::with_range(m, std::move(mu)));
  return out;
}

// Nonzero subsets of the atoms inside `cover`.
inline std::vector<dimension::CentralFlags> central_below(const dimension::CentralFlags& cover) {
  std::vector<dimension::CentralFlags> out;
  const std::size_t r = cover.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    dimension::CentralFlags z(r);
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i) {
      z[i] = (mask >> i) & 1;
      if (z[i] && !cover[i]) ok = false;
    }
    if (ok) out.push_back(std::move(z));
  }
  return out;
}

inline Element diag_projection(const AlgebraShape& s, const std::vector<std::size_t>& rank) {
  auto p = Element::zero(s);
  for (std::size_t k = 0; k < s.num_blocks(); ++k)
    for (std::size_t i = 0; i < rank[k]; ++i) p.block(k)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  return p;
}

inline std::vector<std::vector<std::size_t>> all_ranks(const AlgebraShape& s) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (auto n : s.blocks()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& b : out)
      for (std::size_t r = 0; r <= n; ++r) {
        auto v = b;
        v.push_back(r);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<AlgebraShape> all_small_shapes(std::size_t max_blocks, std::size_t max_size) {
  std::vector<AlgebraShape> out;
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t b = 1; b <= max_blocks; ++b) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& v : layer)
      for (std::size_t n = 1; n <= max_size; ++n) {
        auto w = v;
        w.push_back(n);
        next.push_back(w);
      }
    for (const auto& v : next) out.emplace_back(v);
    layer = std::move(next);
  }
  return out;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- cardinal

inline void cardinal_laws(gen::Rng&, const Tolerance&, Checker& c) {
  auto v = small_cardinals();
  for (const auto& a : v) {
    c.expect(succ(a) > a, "succ not increasing at " + a.str());
    if (a.is_infinite()) c.expect(mul(a, a) == a, "a*a != a at " + a.str());
    for (const auto& b : v) {
      int n = (a < b) + (a == b) + (a > b);
      c.expect(n == 1, "trichotomy at " + a.str() + "," + b.str());
      if (a < b) c.expect(succ(a) < succ(b), "succ not strictly monotone");
      if (b.is_infinite() && a <= b && !a.is_zero()) {
        c.expect(mul(a, b) == b, "a*b != b at " + a.str() + "," + b.str());
        c.expect(add(a, b) == b, "a+b != b at " + a.str() + "," + b.str());
      }
      std::vector<Cardinal> s{a, b};
      auto sp = sup_plus(s);
      c.expect(sp > a && sp > b, "sup_plus not above");
      // No cardinal strictly between sup and sup_plus.
      for (const auto& x : v) c.expect(!(sup(s) < x && x < sp), "gap below sup_plus");
    }
  }
}

// ---------------------------------------------------------------- fdalg

inline void fdalg_cstar_identity(gen::Rng& rng, const Tolerance&, Checker& c) {
  for (int t = 0; t < 30; ++t) {
    auto s = gen::random_shape(rng, 3, 4);
    auto x = gen::random_element(rng, s);
    double nx = op_norm(x);
    c.expect(std::abs(op_norm(adjoint(x) * x) - nx * nx) <= 1e-6 * (1 + nx) * (1 + nx),
             "C*-identity");
    c.expect(op_norm(adjoint(adjoint(x)) - x) == 0.0, "involution");
  }
}

inline void fdalg_a_entry_roundtrip(gen::Rng& rng, const Tolerance&, Checker& c) {
  for (int t = 0; t < 20; ++t) {
    auto s = gen::random_shape(rng, 3, 3);
    auto n = gen::uniform(rng, 1, 3);
    auto x = gen::random_element(rng, matrix_algebra(s, n));
    auto y = assemble(n, a_entries(x, n));
    bool same = true;
    for (std::size_t k = 0; k < x.shape().num_blocks(); ++k) same = same && x.block(k) == y.block(k);
    c.expect(same, "a_entry/assemble not bit-identical");
  }
}

inline void fdalg_orthogonal_sum(gen::Rng& rng, const Tolerance& tol, Checker& c) {
  for (int t = 0; t < 30; ++t) {
    auto s = gen::random_shape(rng, 3, 4);
    auto fam = gen::orthogonal_family(rng, s, 2);
    c.expect(is_projection(fam[0] + fam[1], tol), "orthogonal sum not a projection");
  }
}

// ---------------------------------------------------------------- projlat

inline void projlat_schroeder_bernstein(gen::Rng& rng, const Tolerance& tol, Checker& c) {
  for (int t = 0; t < 60; ++t) {
    auto s = gen::random_shape(rng, 3, 3);
    auto e = gen::projection_of_rank(rng, s, gen::random_rank(rng, s));
    auto f = gen::projection_of_rank(rng, s, gen::random_rank(rng, s));
    if (projlat::subequiv(e, f, tol) && projlat::subequiv(f, e, tol))
      c.expect(projlat::equivalent(e, f, tol), "e<~f, f<~e but not e~f");
    // Central multiplication.
    auto g = gen::projection_of_rank(rng, s, projlat::rank_vector(e, tol));
    std::vector<bool> flags;
    for (std::size_t k = 0; k < s.num_blocks(); ++k) flags.push_back(gen::uniform(rng, 0, 1));
    auto ze = projlat::CentralProjection(flags).to_element(s);
    c.expect(projlat::equivalent(ze * e, ze * g, tol), "ze ~ zf fails");
  }
}

inline void projlat_additivity(gen::Rng& rng, const Tolerance& tol, Checker& c) {
  for (int t = 0; t < 40; ++t) {
    auto s = gen::random_shape(rng, 3, 4);
    auto es = gen::orthogonal_family(rng, s, 3);
    // Equivalent copies f_i, again orthogonal: the ranks of e_i carved from
    // disjoint columns of another unitary.
    std::vector<Element> f2;
    auto w = gen::random_unitary(rng, s);
    for (std::size_t i = 0; i < 3; ++i) f2.push_back(Element::zero(s));
    for (std::size_t k = 0; k < s.num_blocks(); ++k) {
      Eigen::Index col = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        auto r = static_cast<Eigen::Index>(projlat::rank_vector(es[i], tol)[k]);
        auto cols = w.block(k).middleCols(col, r);
        f2[i].block(k) = cols * cols.adjoint();
        col += r;
      }
    }
    auto se = projlat::proj_sup(es, tol);
    auto sf = projlat::proj_sup(f2, tol);
    c.expect(projlat::equivalent(se, sf, tol), "additivity of equivalence");
    c.expect(op_norm(se - (es[0] + es[1] + es[2])) <= 1e-9, "orthogonal sup != sum");
  }
}

inline void projlat_comparison_exhaustive(gen::Rng&, const Tolerance& tol, Checker& c) {
  for (const auto& s : all_small_shapes(2, 3)) {
    auto ranks = all_ranks(s);
    for (const auto& re : ranks)
      for (const auto& rf : ranks) {
        auto e = diag_projection(s, re), f = diag_projection(s, rf);
        auto d = projlat::comparison_decomposition(e, f, tol);
        auto x = d.x.to_element(s), y = d.y.to_element(s), z = d.z.to_element(s);
        c.expect(op_norm(x + y + z - Element::identity(s)) == 0.0, "x+y+z != 1");
        c.expect(projlat::strict_subequiv(x * e, x * f, tol), "xe < xf");
        c.expect(projlat::equivalent(y * e, y * f, tol), "ye ~ yf");
        c.expect(projlat::strict_subequiv(z * f, z * e, tol), "ze > zf");
      }
  }
}

// Random projection p <= e: a random rank inside e's range.
inline Element random_subprojection(gen::Rng& rng, const Element& e, const Tolerance& tol) {
  auto r = projlat::rank_vector(e, tol);
  auto out = Element::zero(e.shape());
  for (std::size_t k = 0; k < r.size(); ++k) {
    auto basis = projlat::range_basis(e.block(k), r[k]);
    if (r[k] == 0) continue;
    auto w = gen::haar_unitary(rng, static_cast<Eigen::Index>(r[k]));
    auto keep = static_cast<Eigen::Index>(gen::uniform(rng, 0, r[k]));
    Matrix cols = basis * w.leftCols(keep);
    out.block(k) = cols * cols.adjoint();
  }
  return out;
}

inline void projlat_corners(gen::Rng& rng, const Tolerance& tol, Checker& c) {
  for (int t = 0; t < 40; ++t) {
    auto s = gen::random_shape(rng, 3, 4);
    auto rank = gen::random_rank(rng, s);
    rank[0] = std::max<std::size_t>(rank[0], 1);
    auto e = gen::projection_of_rank(rng, s, rank);
    auto p = random_subprojection(rng, e, tol);
    auto q = random_subprojection(rng, e, tol);
    c.expect(projlat::in_corner(e, p, tol), "p <= e not in corner");
    projlat::Corner corner(e, tol);
    auto pc = corner.restrict(p), qc = corner.restrict(q);
    c.expect(projlat::equivalent(p, q, tol) == projlat::equivalent(pc, qc, tol),
             "equivalence differs between A and eAe");
    if (projlat::equivalent(p, q, tol)) {
      auto v = projlat::partial_isometry(p, q, tol);
      c.expect(op_norm(v - q * v * p) <= 1e-9, "partial isometry leaves the corner");
    }
    // c_{eAe}(p) computed inside the corner equals c_A(p) e.
    auto cover_in_corner = corner.extend(projlat::central_cover(pc, tol).to_element(corner.shape()));
    auto expected = projlat::central_cover(p, tol).to_element(s) * e;
    c.expect(op_norm(cover_in_corner - expected) <= 1e-9, "corner central cover");
    c.expect(op_norm(projlat::corner_central_cover(e, p, tol) - expected) <= 1e-9,
             "corner_central_cover");
  }
}

// ---------------------------------------------------------------- masa

// Random element commuting with every minimal projection of the masa:
// diagonal in its frame.
inline bool commutant_is_diagonal(gen::Rng& rng, const masa::Masa& m, const Tolerance& tol) {
  // Project a random x onto the commutant of the minimal projections by
  // summing p x p; the result must be frame-diagonal.
  auto x = gen::random_element(rng, m.shape());
  auto y = Element::zero(m.shape());
  for (const auto& mp : masa::abelian_frame(m)) y = y + mp.projection * x * mp.projection;
  for (const auto& mp : masa::abelian_frame(m))
    if (!fdalg::commutes(y, mp.projection, tol)) return false;
  return masa::off_diagonal_residual(m, y) <= 1e-9 * (1 + op_norm(y));
}

inline void masa_properties(gen::Rng& rng, const Tolerance& tol, Checker& c) {
  for (int t = 0; t < 25; ++t) {
    auto base = gen::random_shape(rng, 2, 3);
    auto n = gen::uniform(rng, 1, 3);
    auto inst = gen::commuting_family(rng, base, n, gen::uniform(rng, 1, 4));
    auto big = matrix_algebra(base, n);
    auto js = masa::joint_spectral(inst.family, big, tol);
    for (const auto& x : inst.family)
      c.expect(masa::off_diagonal_residual(js.masa, x) <= tol.eps_struct * js.scale,
               "joint_spectral leaves a member non-diagonal");
    c.expect(fdalg::is_unitary(js.masa.unitary(), tol), "frame not unitary");
    c.expect(commutant_is_diagonal(rng, js.masa, tol), "masa not maximal");
    // Equipartition against the standard diagonal A-units.
    auto fs = masa::equipartition(js.masa, n);
    auto sum = Element::zero(big);
    for (std::size_t j = 0; j < n; ++j) {
      sum = sum + fs[j];
      c.expect(projlat::equivalent(fs[j], diag::diagonal_unit(base, n, j), tol),
               "equipartition piece not equivalent to e_jj");
    }
    c.expect(op_norm(sum - Element::identity(big)) <= 1e-9, "equipartition does not sum to 1");
    // Corner masa: e a sum of minimal projections; the compressed masa is
    // maximal abelian in eAe.
    std::vector<std::vector<std::size_t>> cols(big.num_blocks());
    for (std::size_t k = 0; k < big.num_blocks(); ++k)
      for (std::size_t col = 0; col < big[k]; ++col)
        if (col == 0 || gen::uniform(rng, 0, 1)) cols[k].push_back(col);
    auto e = js.masa.projection(cols);
    projlat::Corner corner(e, tol);
    std::vector<Element> compressed;
    for (const auto& x : inst.family) compressed.push_back(corner.restrict(x));
    std::vector<Matrix> frames;
    std::vector<std::vector<masa::SpectralLabel>> labels;
    for (std::size_t i = 0; i < corner.shape().num_blocks(); ++i) {
      auto k = corner.ambient_block(i);
      // Corner coordinates of the selected frame columns.
      auto basis = projlat::range_basis(e.block(k), corner.shape()[i]);
      Matrix f(basis.cols(), static_cast<Eigen::Index>(cols[k].size()));
      for (std::size_t j = 0; j < cols[k].size(); ++j)
        f.col(static_cast<Eigen::Index>(j)) =
            basis.adjoint() * js.masa.frame(k).col(static_cast<Eigen::Index>(cols[k][j]));
      frames.push_back(f);
      labels.emplace_back(cols[k].size());
    }
    masa::Masa cm(corner.shape(), frames, labels);
    c.expect(fdalg::is_unitary(cm.unitary(), tol), "corner frame not unitary");
    c.expect(commutant_is_diagonal(rng, cm, tol), "corner masa not maximal");
    for (const auto& x : compressed)
      c.expect(masa::off_diagonal_residual(cm, x) <= 1e-8 * js.scale,
               "compressed member not diagonal in corner masa");
  }
}

// ---------------------------------------------------------------- diag

// Largest distance in a greedy nearest-neighbour matching of the two
// spectra.
inline double spectrum_distance(const Matrix& a, const Matrix& b) {
  Eigen::ComplexEigenSolver<Matrix> ea(a), eb(b);
  std::vector<Complex> rest(eb.eigenvalues().data(),
                            eb.eigenvalues().data() + eb.eigenvalues().size());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < ea.eigenvalues().size(); ++i) {
    auto it = std::min_element(rest.begin(), rest.end(), [&](auto x, auto y) {
      return std::abs(x - ea.eigenvalues()(i)) < std::abs(y - ea.eigenvalues()(i));
    });
    worst = std::max(worst, std::abs(*it - ea.eigenvalues()(i)));
    rest.erase(it);
  }
  return worst;
}

inline void diag_properties(gen::Rng& rng, const Tolerance& tol, Checker& c) {
  for (int t = 0; t < 25; ++t) {
    auto base = gen::random_shape(rng, 3, 3);
    auto n = gen::uniform(rng, 1, 3);
    auto inst = gen::commuting_family(rng, base, n, gen::uniform(rng, 1, 4));
    auto r = diag::simultaneous_diagonalize(base, n, inst.family, tol);
    const double sc = r.scale;
    c.expect(r.unitarity_defect <= 1e-10, "unitarity defect");
    for (std::size_t i = 0; i < inst.family.size(); ++i) {
      const auto& y = r.diagonalized[i];
      c.expect(diag::is_a_diagonal(y, n, tol).residual <= 1e-8 * sc, "not A-diagonal");
      c.expect(r.members[i].roundtrip <= 1e-10 * sc, "round trip");
      // Spectrum preserved block by block. Eigenvalues come from a grid with
      // spacing 0.5, so nearest-neighbour matching pairs them correctly.
      for (std::size_t k = 0; k < y.shape().num_blocks(); ++k)
        c.expect(spectrum_distance(inst.family[i].block(k), y.block(k)) <= 1e-8 * sc,
                 "spectrum changed");
      // Stronger than required: fully diagonal per block.
      double off = 0;
      for (const auto& b : y.blocks())
        for (Eigen::Index p = 0; p < b.rows(); ++p)
          for (Eigen::Index q = 0; q < b.cols(); ++q)
            if (p != q) off = std::max(off, std::abs(b(p, q)));
      c.expect(off <= 1e-8 * sc, "not scalar-diagonal");
      for (std::size_t j = i + 1; j < inst.family.size(); ++j)
        c.expect(fdalg::commutes(y, r.diagonalized[j], tol), "commutativity lost");
    }
  }
}

// ---------------------------------------------------------------- dimension

// Every projection with the given mu, one per admissible complement: nu is
// kappa where mu < kappa and ranges over 0..kappa where mu = kappa.
inline std::vector<CProjection> all_complements(const CProjection& e) {
  const auto& m = e.model();
  std::vector<std::vector<Cardinal>> nus{{}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<Cardinal> opts{m[i]};
    if (e.mu()[i] == m[i]) {
      opts = {Cardinal::finite(0)};
      for (std::uint64_t j = 0; j <= m[i].value(); ++j) opts.push_back(Cardinal::aleph(j));
    }
    std::vector<std::vector<Cardinal>> next;
    for (const auto& base : nus)
      for (const auto& o : opts) {
        auto v = base;
        v.push_back(o);
        next.push_back(std::move(v));
      }
    nus = std::move(next);
  }
  std::vector<CProjection> out;
  for (auto& nu : nus) out.emplace_back(m, e.mu(), std::move(nu));
  return out;
}

inline void dimension_single(const CProjection& e, Checker& c) {
  using namespace awstar::dimension;
  const auto& m = e.model();
  c.expect(e.complement().complement() == e, "1 - (1 - e) = e");
  if (e.is_zero()) {
    c.expect(dim_d(e).is_zero() && dim_dbar(e).is_zero(), "d(0) = dbar(0) = 0");
    c.expect(is_equidimensional(e), "0 is equidimensional");
    return;
  }
  auto d = dim_d(e);
  auto g = gamma_sizes(e);
  c.expect(succ(sup(g)) == d, "dim_d != succ(max gamma_sizes)");
  c.expect(g.front() == Cardinal::aleph(0), "aleph_0 not in Delta");
  for (std::size_t i = 0; i < g.size(); ++i)
    c.expect(g[i] == Cardinal::aleph(i), "gamma_sizes not downward closed");
  c.expect(delta(e).achieved, "delta not achieved");
  auto cover = central_cover(e);
  for (const auto& z : central_below(cover)) {
    auto ze = cut(z, e);
    c.expect(d <= dim_d(ze), "d(e) <= d(ze)");
    c.expect(dim_dbar(ze) <= dim_dbar(e), "dbar(ze) <= dbar(e)");
    if (is_equidimensional(e)) c.expect(dim_d(ze) == d, "equidimensional d(ze) = d(e)");
  }
  auto parts = equidim_decomposition(e);
  std::vector<bool> covered(m.size(), false);
  for (const auto& p : parts) {
    auto ze = cut(p.z, e);
    c.expect(is_equidimensional(ze) && dim_d(ze) == p.alpha, "piece not alpha-equidimensional");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (p.z[i]) {
        c.expect(!covered[i], "pieces overlap");
        covered[i] = true;
      } else if (cover[i]) {
        auto bigger = p.z;
        bigger[i] = true;
        auto be = cut(bigger, e);
        c.expect(!(is_equidimensional(be) && dim_d(be) == p.alpha), "piece not maximal");
      }
    }
  }
  c.expect(covered == cover, "pieces do not sum to the cover");
}

// Pair laws. Per-projection data is computed once; the pair loop is the bulk
// of the exhaustive sweep.
inline void dimension_pairs(const std::vector<CProjection>& ps, Checker& c) {
  using namespace awstar::dimension;
  struct Info {
    bool zero, equi;
    CentralFlags cover;
    Cardinal d;
  };
  std::vector<Info> info;
  for (const auto& e : ps)
    info.push_back({e.is_zero(), is_equidimensional(e), central_cover(e), dim_d(e)});
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = 0; b < ps.size(); ++b) {
      const auto& e = ps[a];
      const auto& f = ps[b];
      const auto& ie = info[a];
      const auto& jf = info[b];
      bool sub = subequiv(e, f);
      bool eq = equivalent(e, f);
      c.expect(compare_by_dimension(e, f) == sub, "D_e <= D_f differs from e <~ f");
      if (ie.zero || jf.zero) continue;
      if (ie.cover == jf.cover) {
        if (sub) c.expect(ie.d <= jf.d, "cilin1");
        if (ie.equi && jf.equi) {
          if (sub && !eq) c.expect(ie.d < jf.d, "cilin2");
          c.expect(eq == (ie.d == jf.d), "cilin");
        }
      }
      if (subequiv(f, e)) c.expect(equivalent(join(e, f), e), "e ~ e v f");
    }
}

/// Every dimension law over every model with up to `max_atoms` atoms and
/// aleph indices up to `max_index`.
inline void dimension_sweep(std::size_t max_atoms, std::uint64_t max_index, Checker& c) {
  for (const auto& m : all_models(max_atoms, max_index)) {
    auto ps = all_projections(m);
    for (const auto& e : ps)
      for (const auto& full : all_complements(e)) dimension_single(full, c);
    dimension_pairs(ps, c);
  }
}

inline void dimension_exhaustive(gen::Rng&, const Tolerance&, Checker& c) {
  dimension_sweep(3, 3, c);
}

inline void dimension_regression(gen::Rng&, const Tolerance&, Checker& c) {
  using namespace awstar::dimension;
  AtomicModel m({Cardinal::aleph(0), Cardinal::aleph(1)});
  auto one = CProjection::one(m);
  auto right = CProjection::with_range(m, {Cardinal::finite(0), Cardinal::aleph(1)});
  c.expect(subequiv(right, one) && !equivalent(right, one), "(0,1) < (1,1)");
  c.expect(dim_d(right) > dim_d(one), "d((0,1)) > d((1,1))");
  c.expect(dim_d(one) == Cardinal::aleph(1), "d((1,1)) = dim(H)^+");
  c.expect(dim_d(right) == Cardinal::aleph(2), "d((0,1)) = dim(K)^+");
  auto p = CProjection::with_range(m, {Cardinal::aleph(0), Cardinal::aleph(0)});
  c.expect(subequiv(p, one) && !equivalent(p, one), "(1,p) < (1,1)");
  c.expect(central_cover(p) == central_cover(one), "c((1,p)) = c((1,1))");
  c.expect(dim_d(p) == dim_d(one), "d((1,p)) = d((1,1))");
  auto h = halving(m);
  c.expect(equivalent(h, one) && equivalent(h.complement(), one), "e ~ 1 ~ 1-e");
  auto units = std::get<std::vector<CProjection>>(matrix_units(m, Cardinal::finite(3)));
  c.expect(units.size() == 3, "three matrix units");
  for (const auto& u : units) c.expect(equivalent(u, one), "matrix unit ~ 1");
}

// ---------------------------------------------------------------- functor

inline void functor_properties(gen::Rng& rng, const Tolerance& tol, Checker& c) {
  for (int t = 0; t < 20; ++t) {
    auto a = gen::random_shape(rng, 2, 3);
    auto g = gen::random_star_hom(rng, a);
    auto h = gen::random_star_hom(rng, g.codomain(), 1);
    auto x = gen::random_element(rng, a), y = gen::random_element(rng, a);
    auto gx = g.apply(x);
    double s = 1 + op_norm(x) * op_norm(y);
    c.expect(op_norm(g.apply(adjoint(x)) - adjoint(gx)) <= 1e-10 * s, "preserves *");
    c.expect(op_norm(g.apply(x * y) - gx * g.apply(y)) <= 1e-10 * s, "preserves products");
    c.expect(op_norm(g.apply(Element::identity(a)) - Element::identity(g.codomain())) <= 1e-10,
             "preserves 1");
    auto hg = functor::compose(h, g);
    c.expect(op_norm(hg.apply(x) - h.apply(gx)) <= 1e-10 * s, "composite hom");
    auto n = gen::uniform(rng, 1, 3);
    auto X = gen::random_element(rng, matrix_algebra(a, n));
    auto lhg = functor::lift_Mn(hg, n);
    auto comp = functor::lift_Mn(h, n).apply(functor::lift_Mn(g, n).apply(X));
    c.expect(op_norm(lhg.apply(X) - comp) <= 1e-10 * (1 + op_norm(X)), "M_n(hg) = M_n(h)M_n(g)");
    c.expect(op_norm(functor::lift_Mn(g, n).apply(X) - functor::apply_entrywise(g, X, n)) <=
                 1e-10 * (1 + op_norm(X)),
             "lift is entrywise");
    auto id = functor::lift_Mn(functor::StarHom::identity(a), n);
    c.expect(op_norm(id.apply(X) - X) <= 1e-12, "lift of identity");
    // Sup preservation, both modes, on M_n(A).
    auto lg = functor::lift_Mn(g, n);
    auto big = matrix_algebra(a, n);
    auto orth = gen::orthogonal_family(rng, big, gen::uniform(rng, 1, 3));
    auto arb = gen::arbitrary_family(rng, big, gen::uniform(rng, 1, 3));
    c.expect(functor::check_sup_preservation(lg, orth, true, tol).preserved, "orthogonal sup");
    c.expect(functor::check_sup_preservation(lg, arb, false, tol).preserved, "arbitrary sup");
    // Kernel: ker = zA.
    auto z = functor::kernel_projection(g).to_element(a);
    c.expect(op_norm(g.apply(z * x)) <= 1e-12, "zA in kernel");
    c.expect(op_norm(g.apply(x - z * x)) >= 1e-6 * op_norm(x - z * x), "kernel larger than zA");
    // Proof step: diagonalize the orthogonal family; the sup of diagonal
    // projections is computed entrywise.
    auto dr = diag::simultaneous_diagonalize(a, n, orth, tol);
    auto sup_diag = projlat::proj_sup(dr.diagonalized, tol);
    std::vector<Element> grid(n * n, Element::zero(a));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Element> entries;
      for (const auto& p : dr.diagonalized) entries.push_back(a_entry(p, n, j, j));
      grid[j * n + j] = projlat::proj_sup(entries, tol);
    }
    c.expect(op_norm(sup_diag - assemble(n, grid)) <= 1e-9, "diagonal sup not entrywise");
  }
}

}  // namespace detail

inline std::vector<std::pair<std::string, CaseFn>> all_cases() {
  using namespace detail;
  return {
      {"cardinal.laws", cardinal_laws},
      {"dimension.exhaustive", dimension_exhaustive},
      {"dimension.regression", dimension_regression},
      {"diag.properties", diag_properties},
      {"fdalg.a_entry_roundtrip", fdalg_a_entry_roundtrip},
      {"fdalg.cstar_identity", fdalg_cstar_identity},
      {"fdalg.orthogonal_sum", fdalg_orthogonal_sum},
      {"functor.properties", functor_properties},
      {"masa.properties", masa_properties},
      {"projlat.additivity", projlat_additivity},
      {"projlat.comparison_exhaustive", projlat_comparison_exhaustive},
      {"projlat.corners", projlat_corners},
      {"projlat.schroeder_bernstein", projlat_schroeder_bernstein},
  };
}

/// Runs every case with its own generator seeded from (seed, case name), so
/// results do not depend on which cases run or in what order.
inline std::vector<CaseResult> run(std::uint64_t seed, const fdalg::Tolerance& tol) {
  std::vector<CaseResult> out;
  for (const auto& [name, fn] : all_cases()) {
    gen::Rng rng(seed ^ detail::fnv1a(name));
    Checker c;
    CaseResult r{name, false, 0, ""};
    try {
      fn(rng, tol, c);
      r.passed = c.failures() == 0;
      r.detail = c.failures() ? std::to_string(c.failures()) + " failures: " + c.messages() : "";
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.checks = c.checks();
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace awstar::selftest
