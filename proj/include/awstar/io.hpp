#pragma once

// JSON encodings of every value type. Malformed input raises InputError.

#include <string>
#include <vector>

#include <json.hpp>

#include "awstar/cardinal.hpp"
#include "awstar/diag.hpp"
#include "awstar/dimension.hpp"
#include "awstar/fdalg.hpp"
#include "awstar/functor.hpp"
#include "awstar/masa.hpp"
#include "awstar/projlat.hpp"

namespace awstar::io {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

// Cardinal: n or {"aleph": k}.
inline json to_json(const Cardinal& c) {
  if (c.is_finite()) return c.value();
  return json{{"aleph", c.value()}};
}

inline Cardinal cardinal_from_json(const json& j) {
  return guarded("cardinal", [&] {
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
      return Cardinal::finite(j.get<std::uint64_t>());
    if (j.is_object() && j.size() == 1 && j.contains("aleph") &&
        j.at("aleph").is_number_integer() && j.at("aleph").get<std::int64_t>() >= 0)
      return Cardinal::aleph(j.at("aleph").get<std::uint64_t>());
    throw InputError("malformed cardinal: " + j.dump());
  });
}

inline json to_json(const std::vector<Cardinal>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

inline std::vector<Cardinal> cardinals_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of cardinals");
  std::vector<Cardinal> out;
  for (const auto& c : j) out.push_back(cardinal_from_json(c));
  return out;
}

// Complex matrix: row-major list of rows of [re, im].
inline json to_json(const fdalg::Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline fdalg::Matrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array()) throw InputError("matrix must be a list of rows");
    auto r = static_cast<Eigen::Index>(j.size());
    auto c = r ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    fdalg::Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      const auto& row = j.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c)
        throw InputError("ragged matrix");
      for (Eigen::Index k = 0; k < c; ++k) {
        const auto& z = row.at(static_cast<std::size_t>(k));
        if (z.is_number()) {
          m(i, k) = z.get<double>();
        } else {
          if (!z.is_array() || z.size() != 2) throw InputError("complex entry must be [re, im]");
          m(i, k) = fdalg::Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
      }
    }
    return m;
  });
}

inline json to_json(const fdalg::AlgebraShape& s) { return s.blocks(); }

inline fdalg::AlgebraShape shape_from_json(const json& j) {
  return guarded("shape", [&] {
    if (!j.is_array()) throw InputError("shape must be a list of block sizes");
    return fdalg::AlgebraShape(j.get<std::vector<std::size_t>>());
  });
}

// Element: {"shape": [n1, ...], "blocks": [matrix, ...]}.
inline json to_json(const fdalg::Element& x) {
  json blocks = json::array();
  for (const auto& b : x.blocks()) blocks.push_back(to_json(b));
  return {{"shape", to_json(x.shape())}, {"blocks", std::move(blocks)}};
}

inline fdalg::Element element_from_json(const json& j) {
  return guarded("element", [&] {
    auto s = shape_from_json(j.at("shape"));
    std::vector<fdalg::Matrix> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(matrix_from_json(b));
    return fdalg::Element(s, std::move(blocks));
  });
}

inline std::vector<fdalg::Element> elements_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of elements");
  std::vector<fdalg::Element> out;
  for (const auto& e : j) out.push_back(element_from_json(e));
  return out;
}

inline json to_json(const projlat::RankVector& r) { return json(r); }
inline json to_json(const projlat::CentralProjection& z) { return json(z.flags()); }

// Masa: {"shape", "frames": [unitary, ...], "labels": [[[[re, im], ...], ...], ...]}.
inline json to_json(const masa::Masa& m) {
  json frames = json::array(), labels = json::array();
  for (std::size_t k = 0; k < m.shape().num_blocks(); ++k) {
    frames.push_back(to_json(m.frame(k)));
    json bl = json::array();
    for (const auto& lab : m.labels(k)) {
      json l = json::array();
      for (const auto& z : lab) l.push_back({z.real(), z.imag()});
      bl.push_back(std::move(l));
    }
    labels.push_back(std::move(bl));
  }
  return {{"shape", to_json(m.shape())}, {"frames", frames}, {"labels", labels}};
}

inline masa::Masa masa_from_json(const json& j) {
  return guarded("masa", [&] {
    auto s = shape_from_json(j.at("shape"));
    std::vector<fdalg::Matrix> frames;
    for (const auto& f : j.at("frames")) frames.push_back(matrix_from_json(f));
    std::vector<std::vector<masa::SpectralLabel>> labels;
    for (const auto& bl : j.at("labels")) {
      std::vector<masa::SpectralLabel> b;
      for (const auto& l : bl) {
        masa::SpectralLabel lab;
        for (const auto& z : l) lab.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
        b.push_back(std::move(lab));
      }
      labels.push_back(std::move(b));
    }
    return masa::Masa(s, std::move(frames), std::move(labels));
  });
}

// StarHom: {"domain", "codomain", "mult": [[...]], "conjugators": [unitary, ...]}.
inline json to_json(const functor::StarHom& h) {
  json conj = json::array();
  for (const auto& u : h.conjugators()) conj.push_back(to_json(u));
  return {{"domain", to_json(h.domain())},
          {"codomain", to_json(h.codomain())},
          {"mult", h.multiplicities()},
          {"conjugators", std::move(conj)}};
}

inline functor::StarHom star_hom_from_json(const json& j) {
  return guarded("hom", [&] {
    auto dom = shape_from_json(j.at("domain"));
    auto mult = j.at("mult").get<functor::Multiplicities>();
    if (!j.contains("conjugators") && !j.contains("codomain"))
      return functor::StarHom::embedding(dom, std::move(mult));
    auto cod = shape_from_json(j.at("codomain"));
    std::vector<fdalg::Matrix> conj;
    if (j.contains("conjugators")) {
      for (const auto& u : j.at("conjugators")) conj.push_back(matrix_from_json(u));
    } else {
      for (auto m : cod.blocks()) conj.push_back(fdalg::Matrix::Identity(m, m));
    }
    return functor::StarHom(dom, cod, std::move(mult), std::move(conj));
  });
}

// Atomic model {"atoms": [...]} and projection {"mu": [...], "nu": [...]}.
inline json to_json(const dimension::AtomicModel& m) { return {{"atoms", to_json(m.atoms())}}; }

inline dimension::AtomicModel model_from_json(const json& j) {
  return guarded("model", [&] { return dimension::AtomicModel(cardinals_from_json(j.at("atoms"))); });
}

inline json to_json(const dimension::CProjection& e) {
  return {{"mu", to_json(e.mu())}, {"nu", to_json(e.nu())}};
}

/// Reads mu (and optionally nu) against a model. Without nu the complement
/// is kappa where mu < kappa and 0 where mu = kappa.
inline dimension::CProjection cprojection_from_json(const dimension::AtomicModel& m,
                                                    const json& j) {
  return guarded("projection", [&] {
    auto mu = cardinals_from_json(j.at("mu"));
    if (!j.contains("nu")) return dimension::CProjection::with_range(m, std::move(mu));
    return dimension::CProjection(m, std::move(mu), cardinals_from_json(j.at("nu")));
  });
}

inline json to_json(const dimension::CentralFlags& z) { return json(std::vector<bool>(z)); }

inline json to_json(const fdalg::Tolerance& t) {
  return {{"eps_struct", t.eps_struct}, {"eps_cluster", t.eps_cluster}};
}

inline json to_json(const diag::DiagonalizationResult& r) {
  json diagd = json::array(), residuals = json::array(), roundtrip = json::array();
  for (const auto& y : r.diagonalized) diagd.push_back(to_json(y));
  for (const auto& m : r.members) {
    residuals.push_back(m.off_diagonal);
    roundtrip.push_back(m.roundtrip);
  }
  return {{"u", to_json(r.u)},
          {"diagonalized", std::move(diagd)},
          {"residuals", std::move(residuals)},
          {"roundtrip", std::move(roundtrip)},
          {"unitarity_defect", r.unitarity_defect},
          {"scale", r.scale}};
}

inline json to_json(const functor::SupReport& r) {
  return {{"rank_image_of_sup", r.rank_image_of_sup},
          {"rank_sup_of_images", r.rank_sup_of_images},
          {"defect", r.defect},
          {"preserved", r.preserved}};
}

inline json to_json(const std::vector<dimension::EquidimensionalPiece>& d) {
  json a = json::array();
  for (const auto& p : d) a.push_back({{"z", to_json(p.z)}, {"alpha", to_json(p.alpha)}});
  return a;
}

}  // namespace awstar::io
