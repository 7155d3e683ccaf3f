// awstar: command-line front end for the concrete and symbolic engines.
//
// Exit codes: 0 success, 1 verification failure (a property that must hold
// did not), 2 bad input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "awstar/diag.hpp"
#include "awstar/dimension.hpp"
#include "awstar/functor.hpp"
#include "awstar/gen.hpp"
#include "awstar/io.hpp"
#include "awstar/masa.hpp"
#include "awstar/projlat.hpp"
#include "awstar/selftest.hpp"

namespace {

using namespace awstar;
using io::json;

struct Options {
  std::string input = "-";
  std::string out;
  double tol_struct = 1e-9;
  double tol_cluster = 1e-8;
  std::uint64_t seed = 0;
  // gen
  std::string kind = "commuting";
  std::vector<std::size_t> shape{1};
  std::size_t n = 2;
  std::size_t members = 3;
  std::size_t atoms = 2;
  std::uint64_t max_index = 2;
  bool orthogonal = true;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fdalg::Tolerance tolerance(const Options& o) {
  fdalg::Tolerance t{o.tol_struct, o.tol_cluster};
  t.validate();
  return t;
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json envelope(const std::string& command, const Options& o) {
  return {{"command", command}, {"version", io::kVersion}, {"tolerance", io::to_json(tolerance(o))}};
}

json cmd_diagonalize(const Options& o) {
  auto in = read_input(o.input);
  auto tol = tolerance(o);
  auto base = io::shape_from_json(in.at("base_shape"));
  auto n = io::guarded("n", [&] { return in.at("n").get<std::size_t>(); });
  auto family = io::elements_from_json(in.at("family"));
  auto r = diag::simultaneous_diagonalize(base, n, family, tol);
  auto rep = envelope("diagonalize", o);
  rep["result"] = io::to_json(r);
  bool ok = r.unitarity_defect <= tol.eps_struct;
  for (const auto& m : r.members) ok = ok && m.off_diagonal <= tol.eps_struct * r.scale;
  rep["verified"] = ok;
  if (!ok) throw VerificationFailure(rep.dump(2));
  return rep;
}

json cmd_compare(const Options& o) {
  auto in = read_input(o.input);
  auto rep = envelope("compare", o);
  if (in.contains("atoms")) {
    auto m = io::model_from_json(in);
    auto e = io::cprojection_from_json(m, in.at("e"));
    auto f = io::cprojection_from_json(m, in.at("f"));
    bool sub = dimension::subequiv(e, f);
    bool by_dim = sub;
    if ((e.is_zero() || dimension::is_properly_infinite(e)) &&
        (f.is_zero() || dimension::is_properly_infinite(f))) {
      by_dim = dimension::compare_by_dimension(e, f);
      rep["compare_by_dimension"] = by_dim;
    }
    rep["equivalent"] = dimension::equivalent(e, f);
    rep["subequiv"] = sub;
    if (by_dim != sub) throw VerificationFailure("dimension comparison disagrees with subequivalence");
    return rep;
  }
  auto tol = tolerance(o);
  auto e = io::element_from_json(in.at("e"));
  auto f = io::element_from_json(in.at("f"));
  auto d = projlat::comparison_decomposition(e, f, tol);
  rep["rank_e"] = projlat::rank_vector(e, tol);
  rep["rank_f"] = projlat::rank_vector(f, tol);
  rep["x"] = io::to_json(d.x);
  rep["y"] = io::to_json(d.y);
  rep["z"] = io::to_json(d.z);
  rep["equivalent"] = projlat::equivalent(e, f, tol);
  rep["subequiv"] = projlat::subequiv(e, f, tol);
  rep["strict_subequiv"] = projlat::strict_subequiv(e, f, tol);
  return rep;
}

json cmd_dimension(const Options& o) {
  auto in = read_input(o.input);
  auto m = io::model_from_json(in);
  auto e = io::cprojection_from_json(m, in);
  auto rep = envelope("dimension", o);
  rep["projection"] = io::to_json(e);
  rep["properly_infinite"] = dimension::is_properly_infinite(e);
  rep["d"] = io::to_json(dimension::dim_d(e));
  rep["dbar"] = io::to_json(dimension::dim_dbar(e));
  rep["D"] = io::to_json(dimension::dimension_function(e));
  rep["equidimensional"] = dimension::is_equidimensional(e);
  if (!e.is_zero()) {
    auto g = dimension::gamma_sizes(e);
    auto dl = dimension::delta(e);
    rep["Delta"] = io::to_json(g);
    rep["delta"] = {{"value", io::to_json(dl.value)}, {"achieved", dl.achieved}};
    if (succ(dl.value) != dimension::dim_d(e))
      throw VerificationFailure("d(e) differs from the successor of delta(e)");
  }
  return rep;
}

json cmd_equidecomp(const Options& o) {
  auto in = read_input(o.input);
  auto m = io::model_from_json(in);
  auto e = io::cprojection_from_json(m, in);
  auto parts = dimension::equidim_decomposition(e);
  for (const auto& p : parts) {
    auto ze = dimension::cut(p.z, e);
    if (!dimension::is_equidimensional(ze) || dimension::dim_d(ze) != p.alpha)
      throw VerificationFailure("decomposition piece is not alpha-equidimensional");
  }
  auto rep = envelope("equidecomp", o);
  rep["decomposition"] = io::to_json(parts);
  return rep;
}

json cmd_functor_check(const Options& o) {
  auto in = read_input(o.input);
  auto tol = tolerance(o);
  auto h = io::star_hom_from_json(in.at("hom"));
  std::size_t n = in.value("n", std::size_t{1});
  if (n > 1) h = functor::lift_Mn(h, n);
  auto family = io::elements_from_json(in.at("family"));
  bool orth = in.value("orthogonal_only", false);
  auto r = functor::check_sup_preservation(h, family, orth, tol);
  auto rep = envelope("functor-check", o);
  rep["n"] = n;
  rep["orthogonal_only"] = orth;
  rep["report"] = io::to_json(r);
  if (!r.preserved) throw VerificationFailure(rep.dump(2));
  return rep;
}

json cmd_gen(const Options& o) {
  gen::Rng rng(o.seed);
  fdalg::AlgebraShape base(o.shape);
  if (o.kind == "commuting") {
    auto inst = gen::commuting_family(rng, base, o.n, o.members);
    json fam = json::array();
    for (const auto& x : inst.family) fam.push_back(io::to_json(x));
    return {{"base_shape", io::to_json(base)}, {"n", o.n}, {"family", fam}};
  }
  if (o.kind == "projections") {
    auto big = fdalg::matrix_algebra(base, o.n);
    auto e = gen::projection_of_rank(rng, big, gen::random_rank(rng, big));
    auto f = gen::projection_of_rank(rng, big, gen::random_rank(rng, big));
    return {{"e", io::to_json(e)}, {"f", io::to_json(f)}};
  }
  if (o.kind == "hom") {
    auto h = gen::random_star_hom(rng, base);
    auto big = fdalg::matrix_algebra(base, o.n);
    auto fam = o.orthogonal ? gen::orthogonal_family(rng, big, o.members)
                            : gen::arbitrary_family(rng, big, o.members);
    json f = json::array();
    for (const auto& p : fam) f.push_back(io::to_json(p));
    return {{"hom", io::to_json(h)}, {"n", o.n}, {"family", f}, {"orthogonal_only", o.orthogonal}};
  }
  if (o.kind == "model") {
    auto m = gen::random_model(rng, o.atoms, o.max_index);
    auto e = gen::random_cprojection(rng, m);
    auto f = gen::random_cprojection(rng, m);
    json out = io::to_json(m);
    out["mu"] = io::to_json(e.mu());
    out["nu"] = io::to_json(e.nu());
    out["e"] = io::to_json(e);
    out["f"] = io::to_json(f);
    return out;
  }
  throw InputError("unknown generator kind: " + o.kind);
}

json cmd_selftest(const Options& o) {
  auto results = selftest::run(o.seed, tolerance(o));
  auto rep = envelope("selftest", o);
  rep["seed"] = o.seed;
  json cases = json::array();
  bool ok = true;
  for (const auto& r : results) {
    cases.push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  rep["cases"] = cases;
  rep["passed"] = ok;
  if (!ok) throw VerificationFailure(rep.dump(2));
  return rep;
}

void emit(const json& j, const Options& o) {
  auto text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"awstar: projection comparison, simultaneous diagonalization and dimension theory"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool takes_input) {
    sub->add_option("--tol-struct", o.tol_struct, "structural tolerance");
    sub->add_option("--tol-cluster", o.tol_cluster, "eigenvalue clustering tolerance");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    if (takes_input) sub->add_option("input", o.input, "input JSON file ('-' for stdin)");
  };

  auto* diag_cmd = app.add_subcommand("diagonalize", "simultaneously diagonalize a commuting normal family in M_n(A)");
  auto* compare_cmd = app.add_subcommand("compare", "comparison decomposition and subequivalence of two projections");
  auto* dim_cmd = app.add_subcommand("dimension", "d, d-bar, Delta, delta and D_e of a projection in an atomic model");
  auto* equi_cmd = app.add_subcommand("equidecomp", "equidimensional decomposition of a properly infinite projection");
  auto* functor_cmd = app.add_subcommand("functor-check", "check that a *-homomorphism preserves suprema");
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
  auto* self_cmd = app.add_subcommand("selftest", "run every property suite");
  for (auto* s : {diag_cmd, compare_cmd, dim_cmd, equi_cmd, functor_cmd}) common(s, true);
  common(gen_cmd, false);
  common(self_cmd, false);
  gen_cmd->add_option("--kind", o.kind, "commuting | projections | hom | model")
      ->check(CLI::IsMember({"commuting", "projections", "hom", "model"}));
  gen_cmd->add_option("--shape", o.shape, "base algebra block sizes")->delimiter(',');
  gen_cmd->add_option("--n", o.n, "matrix size over the base algebra");
  gen_cmd->add_option("--members", o.members, "family size");
  gen_cmd->add_option("--atoms", o.atoms, "maximum number of atoms (model)");
  gen_cmd->add_option("--max-index", o.max_index, "maximum aleph index (model)");
  gen_cmd->add_flag("!--non-orthogonal", o.orthogonal, "arbitrary projection family (hom)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    json rep;
    if (*diag_cmd) rep = cmd_diagonalize(o);
    else if (*compare_cmd) rep = cmd_compare(o);
    else if (*dim_cmd) rep = cmd_dimension(o);
    else if (*equi_cmd) rep = cmd_equidecomp(o);
    else if (*functor_cmd) rep = cmd_functor_check(o);
    else if (*gen_cmd) rep = cmd_gen(o);
    else rep = cmd_selftest(o);
    emit(rep, o);
    return 0;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure:\n" << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  }
}
