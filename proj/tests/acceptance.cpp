// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "awstar/diag.hpp"
#include "awstar/dimension.hpp"
#include "awstar/functor.hpp"
#include "awstar/gen.hpp"
#include "awstar/masa.hpp"
#include "awstar/projlat.hpp"
#include "awstar/selftest.hpp"

namespace {

using namespace awstar;
using fdalg::AlgebraShape;
using fdalg::Element;
using fdalg::op_norm;
using selftest::Checker;

// 1. Simultaneous diagonalization on 200 seeded instances.
void diagonalization(Checker& c) {
  gen::Rng rng(1001);
  double worst_off = 0, worst_rt = 0, worst_u = 0;
  for (int t = 0; t < 200; ++t) {
    // Base shapes dominated by (3,2,1): up to three blocks, block k of size <= 3 - k.
    std::vector<std::size_t> b(gen::uniform(rng, 1, 3));
    for (std::size_t k = 0; k < b.size(); ++k) b[k] = gen::uniform(rng, 1, 3 - k);
    AlgebraShape base(b);
    auto n = gen::uniform(rng, 1, 3);
    auto inst = gen::commuting_family(rng, base, n, gen::uniform(rng, 1, 4));
    try {
      auto r = diag::simultaneous_diagonalize(base, n, inst.family);
      c.expect(r.unitarity_defect <= 1e-10, "unitarity defect");
      worst_u = std::max(worst_u, r.unitarity_defect);
      for (const auto& m : r.members) {
        c.expect(m.off_diagonal <= 1e-8 * r.scale, "off-diagonal residual");
        c.expect(m.roundtrip <= 1e-10 * r.scale, "round trip");
        worst_off = std::max(worst_off, m.off_diagonal / r.scale);
        worst_rt = std::max(worst_rt, m.roundtrip / r.scale);
      }
    } catch (const std::exception& e) {
      c.expect(false, std::string("instance threw: ") + e.what());
    }
  }
  std::printf("    worst: unitarity %.2e, off-diagonal/scale %.2e, round trip/scale %.2e\n",
              worst_u, worst_off, worst_rt);
}

// 2. Divisibility obstruction.
void divisibility(Checker& c) {
  bool threw = false;
  try {
    masa::equipartition(masa::Masa::diagonal({3}), 2);
  } catch (const InputError&) {
    threw = true;
  }
  c.expect(threw, "shape (3), n = 2 must fail");
  gen::Rng rng(1002);
  for (int t = 0; t < 50; ++t) {
    auto s = gen::random_shape(rng, 3, 4);
    auto n = gen::uniform(rng, 1, 4);
    auto big = fdalg::matrix_algebra(s, n);
    try {
      auto w = gen::random_unitary(rng, big);
      std::vector<std::vector<masa::SpectralLabel>> labels;
      for (auto b : big.blocks()) labels.emplace_back(b);
      auto f = masa::equipartition(masa::Masa(big, {w.blocks().begin(), w.blocks().end()}, std::move(labels)), n);
      auto want = projlat::rank_vector(f[0]);
      for (const auto& p : f) c.expect(projlat::rank_vector(p) == want, "unequal pieces");
    } catch (const std::exception& e) {
      c.expect(false, std::string("equipartition threw: ") + e.what());
    }
  }
}

// 3. Comparison decomposition over every pair of rank vectors.
void comparison(Checker& c) {
  gen::Rng rng(1003);
  for (const auto& s : selftest::detail::all_small_shapes(3, 3)) {
    auto ranks = selftest::detail::all_ranks(s);
    auto one = Element::identity(s);
    for (const auto& re : ranks)
      for (const auto& rf : ranks) {
        // Exact integer clauses.
        auto d = projlat::comparison_decomposition(re, rf);
        for (std::size_t k = 0; k < re.size(); ++k) {
          int hits = d.x.flags()[k] + d.y.flags()[k] + d.z.flags()[k];
          c.expect(hits == 1, "x, y, z do not partition the center");
          if (d.x.flags()[k]) c.expect(re[k] < rf[k], "xe < xf");
          if (d.y.flags()[k]) c.expect(re[k] == rf[k], "ye ~ yf");
          if (d.z.flags()[k]) c.expect(re[k] > rf[k], "ze > zf");
        }
        // The same clauses on rotated projections of those ranks.
        auto e = gen::projection_of_rank(rng, s, re);
        auto f = gen::projection_of_rank(rng, s, rf);
        try {
          auto dc = projlat::comparison_decomposition(e, f);
          auto x = dc.x.to_element(s), y = dc.y.to_element(s), z = dc.z.to_element(s);
          c.expect(op_norm(x + y + z - one) == 0.0, "x + y + z = 1");
          c.expect(projlat::strict_subequiv(x * e, x * f), "xe < xf (concrete)");
          c.expect(projlat::equivalent(y * e, y * f), "ye ~ yf (concrete)");
          c.expect(projlat::strict_subequiv(z * f, z * e), "ze > zf (concrete)");
        } catch (const std::exception& ex) {
          c.expect(false, std::string("decomposition threw: ") + ex.what());
        }
      }
  }
}

// 4. Dimension theory, exhaustive, plus the two-atom regression.
void dimension_theory(Checker& c) {
  selftest::detail::dimension_sweep(4, 4, c);
  gen::Rng rng(0);
  selftest::detail::dimension_regression(rng, {}, c);
}

// 5. Functoriality and sup preservation.
void functoriality(Checker& c) {
  gen::Rng rng(1005);
  double worst_sup = 0, worst_comp = 0;
  for (int t = 0; t < 100; ++t) {
    auto a = gen::random_shape(rng, 3, 3);
    auto h = gen::random_star_hom(rng, a);
    auto n = gen::uniform(rng, 1, 3);
    auto big = fdalg::matrix_algebra(a, n);
    auto lh = functor::lift_Mn(h, n);
    auto orth = gen::orthogonal_family(rng, big, gen::uniform(rng, 1, 4));
    auto arb = gen::arbitrary_family(rng, big, gen::uniform(rng, 1, 4));
    for (auto [fam, o] : {std::pair{&orth, true}, std::pair{&arb, false}}) {
      auto r = functor::check_sup_preservation(lh, *fam, o);
      c.expect(r.defect <= 1e-9, o ? "orthogonal sup defect" : "arbitrary sup defect");
      c.expect(r.rank_image_of_sup == r.rank_sup_of_images, "rank of sup");
      worst_sup = std::max(worst_sup, r.defect);
    }
    auto g = gen::random_star_hom(rng, h.codomain());
    auto x = gen::random_element(rng, big);
    auto lhs = functor::lift_Mn(functor::compose(g, h), n).apply(x);
    auto rhs = functor::lift_Mn(g, n).apply(lh.apply(x));
    double defect = op_norm(lhs - rhs) / (1 + op_norm(x));
    c.expect(defect <= 1e-10, "composition law");
    worst_comp = std::max(worst_comp, defect);
  }
  std::printf("    worst: sup defect %.2e, composition defect %.2e\n", worst_sup, worst_comp);
}

// 6. Oracle cross-checks.
void oracles(Checker& c) {
  gen::Rng rng(1006);
  for (int t = 0; t < 500; ++t) {
    auto s = gen::random_shape(rng, 3, 4);
    auto r = gen::random_rank(rng, s);
    auto p = gen::projection_of_rank(rng, s, r);
    auto q = gen::projection_of_rank(rng, s, r);
    c.expect(projlat::equivalent(p, q), "equivalent() rejects an equivalent pair");
    auto v = projlat::partial_isometry(p, q);
    c.expect(op_norm(fdalg::adjoint(v) * v - p) <= 1e-10, "v*v = p");
    c.expect(op_norm(v * fdalg::adjoint(v) - q) <= 1e-10, "vv* = q");
  }
  for (const auto& m : selftest::detail::all_models(4, 4))
    for (const auto& e : selftest::detail::all_projections(m)) {
      if (e.is_zero()) continue;
      auto g = dimension::gamma_sizes(e);
      c.expect(dimension::dim_d(e) == succ(sup(g)), "dim_d != succ(max gamma_sizes)");
    }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Checker&)>> criteria[] = {
      {"1 diagonalization (200 instances)", diagonalization},
      {"2 divisibility obstruction", divisibility},
      {"3 comparison theorem (exhaustive)", comparison},
      {"4 dimension theory (exhaustive, <=4 atoms, index <=4)", dimension_theory},
      {"5 functoriality and sup preservation (100 homs)", functoriality},
      {"6 oracle cross-checks", oracles},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.failures() == 0;
    failed += !ok;
    std::printf("%s criterion %s: %zu checks, %zu failures, %.1fs%s%s\n", ok ? "PASS" : "FAIL", name,
                c.checks(), c.failures(), secs, ok ? "" : " -- ", c.messages().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
