#ifndef FCC_VALIDATE_HPP
#define FCC_VALIDATE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/folding.hpp"
#include "fcc/link.hpp"
#include "fcc/simplicial.hpp"

namespace fcc {

/// Outcome of checking the FCC axioms. `is_fcc` is the conjunction of the
/// individual checks; the optional fields hold the first witness found.
struct FccReport {
  std::size_t dimension = 0;
  bool connected = false;
  bool dimensionally_homogeneous = false;
  bool no_boundary = false;
  bool flag_links = false;
  bool foldable = false;
  bool is_fcc = false;

  std::optional<CubeRef> boundary_cube;            ///< an (n-1)-cube in fewer than two n-cubes
  std::optional<VertexId> non_flag_vertex;         ///< vertex whose link is not flag
  std::vector<OrientedEdge> non_flag_clique;       ///< directions spanning no cube
  std::optional<NotFoldable> fold_failure;
  std::optional<Folding> folding;                  ///< the folding found or supplied
  std::string note;
};

/// Checks connectivity, dimensional homogeneity, absence of boundary (which
/// for these complexes is geodesic completeness), flag vertex links and
/// foldability. When `supplied` is given it is verified instead of searching.
inline FccReport validate_fcc(const CubicalComplex& c, const Folding* supplied = nullptr) {
  FccReport r;
  r.dimension = c.dimension();
  if (c.vertex_count() == 0 || c.dimension() == 0) {
    r.note = "complexes of dimension 0 (or empty) are not FCCs";
    return r;
  }
  const std::size_t n = c.dimension();
  r.connected = is_connected(c);
  r.dimensionally_homogeneous = is_dimensionally_homogeneous(c);

  r.no_boundary = true;
  for (CubeIndex i = 0; i < c.count(n - 1); ++i) {
    if (c.cofaces(n - 1, i).size() < 2) {
      r.no_boundary = false;
      r.boundary_cube = CubeRef{n - 1, i};
      break;
    }
  }

  r.flag_links = true;
  for (VertexId v = 0; v < c.vertex_count() && r.flag_links; ++v) {
    auto lk = link(c, v);
    auto check = is_flag(lk.complex);
    if (!check.flag) {
      r.flag_links = false;
      r.non_flag_vertex = v;
      for (auto local : check.witness) r.non_flag_clique.push_back(lk.directions[local]);
    }
  }

  if (supplied) {
    auto problem = supplied->dimension == n ? verify_folding(c, *supplied) : std::string("folding has wrong dimension");
    r.foldable = problem.empty();
    if (r.foldable) {
      r.folding = *supplied;
    } else {
      r.note = "supplied folding rejected: " + problem;
    }
  } else {
    auto result = search_folding(c, n);
    if (auto* f = std::get_if<Folding>(&result)) {
      r.foldable = true;
      r.folding = std::move(*f);
    } else {
      r.fold_failure = std::get<NotFoldable>(std::move(result));
    }
  }

  r.is_fcc = r.connected && r.dimensionally_homogeneous && r.no_boundary && r.flag_links && r.foldable;
  return r;
}

/// Throws NotFCC unless `c` passes validation; returns the folding.
inline Folding require_fcc(const CubicalComplex& c) {
  auto report = validate_fcc(c);
  if (!report.is_fcc) {
    std::string why;
    if (!report.connected) why += " disconnected;";
    if (!report.dimensionally_homogeneous) why += " not homogeneous;";
    if (!report.no_boundary) why += " has boundary;";
    if (!report.flag_links) why += " non-flag link;";
    if (!report.foldable) why += " not foldable;";
    if (!report.note.empty()) why += " " + report.note;
    throw Error(ErrorKind::NotFCC, "input is not an FCC:" + why);
  }
  return *report.folding;
}

}  // namespace fcc

#endif  // FCC_VALIDATE_HPP
