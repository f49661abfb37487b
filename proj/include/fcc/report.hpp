#ifndef FCC_REPORT_HPP
#define FCC_REPORT_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fcc/decomposition.hpp"
#include "fcc/folding.hpp"
#include "fcc/geodesic.hpp"
#include "fcc/rank.hpp"
#include "fcc/validate.hpp"

// Reports are JSON objects. nlohmann::json keeps object keys sorted, so
// dump() is the canonical serialization.

namespace fcc::report {

using Json = nlohmann::json;

inline Json color_list(ColorSet s) {
  Json out = Json::array();
  for (int i = 1; i <= 32; ++i) {
    if (s & color_bit(i)) out.push_back(i);
  }
  return out;
}

inline Json folding(const Folding& f) {
  Json out;
  out["dimension"] = f.dimension;
  out["class_count"] = f.classes.class_count;
  out["class_direction"] = f.direction_of;
  out["vertex_corner"] = f.vertex_corner;
  return out;
}

inline Json not_foldable(const NotFoldable& nf) {
  Json out;
  out["reason"] = nf.reason == NotFoldable::Reason::ParityCycle ? "parity_cycle" : "direction_conflict";
  out["message"] = nf.message;
  if (nf.reason == NotFoldable::Reason::ParityCycle) {
    out["cycle"] = nf.cycle;
    out["cycle_length"] = nf.cycle.size();
    out["color"] = nf.color;
  } else {
    out["classes"] = nf.classes;
  }
  return out;
}

inline Json fcc(const FccReport& r) {
  Json out;
  out["dimension"] = r.dimension;
  out["connected"] = r.connected;
  out["dimensionally_homogeneous"] = r.dimensionally_homogeneous;
  out["no_boundary"] = r.no_boundary;
  out["flag_links"] = r.flag_links;
  out["foldable"] = r.foldable;
  out["is_fcc"] = r.is_fcc;
  if (r.boundary_cube) out["boundary_cube"] = {{"dim", r.boundary_cube->dim}, {"index", r.boundary_cube->index}};
  if (r.non_flag_vertex) {
    out["non_flag_vertex"] = *r.non_flag_vertex;
    Json clique = Json::array();
    for (const auto& e : r.non_flag_clique) clique.push_back(e.edge);
    out["non_flag_clique_edges"] = clique;
  }
  if (r.fold_failure) out["fold_failure"] = not_foldable(*r.fold_failure);
  if (r.folding) out["folding"] = folding(*r.folding);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline Json path(const CubicalComplex& c, const EdgePath& p) {
  Json out;
  out["base"] = p.base;
  out["closed"] = p.closed;
  out["length"] = p.steps.size();
  Json edges = Json::array();
  for (const auto& s : p.steps) edges.push_back({tail(c, s), head(c, s)});
  out["edges"] = edges;
  return out;
}

inline Json complex_summary(const CubicalComplex& c) {
  Json out;
  out["dimension"] = c.dimension();
  out["vertices"] = c.vertex_count();
  Json counts = Json::array();
  for (std::size_t k = 0; k <= c.dimension(); ++k) counts.push_back(c.count(k));
  out["cube_counts"] = counts;
  out["euler_characteristic"] = c.euler_characteristic();
  return out;
}

inline Json attaching_map(const AttachingMap& g) {
  Json out;
  out["vertex_map"] = g.vertex_map;
  out["edge_map"] = g.cube_map.size() > 1 ? Json(g.cube_map[1]) : Json::array();
  return out;
}

inline Json graph_of_spaces(const GraphOfSpaces& g) {
  Json out;
  out["color"] = g.color;
  out["base_connected"] = g.base_connected();
  Json vs = Json::array();
  for (const auto& s : g.vertex_spaces) {
    Json j = complex_summary(s.complex);
    j["parent_vertices"] = s.to_parent;
    vs.push_back(j);
  }
  out["vertex_spaces"] = vs;
  Json es = Json::array();
  for (const auto& h : g.edge_spaces) {
    Json j = complex_summary(h.piece.complex);
    j["carrier_edges"] = h.edge_of;
    es.push_back(j);
  }
  out["edge_spaces"] = es;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json j;
    j["edge_space"] = e.hyperplane;
    j["side0"] = e.side0;
    j["side1"] = e.side1;
    j["attach0"] = attaching_map(e.attach0);
    j["attach1"] = attaching_map(e.attach1);
    edges.push_back(j);
  }
  out["edges"] = edges;
  return out;
}

inline Json sim_classes(const SimClasses& s) {
  Json out;
  out["vertex"] = s.at;
  out["classes"] = s.classes;
  Json w = Json::array();
  for (const auto& x : s.witnesses) {
    w.push_back({{"colors", {x.color_a, x.color_b}},
                 {"edges", {x.a.edge, x.b.edge}},
                 {"angle", to_string(x.angle)}});
  }
  out["witnesses"] = w;
  return out;
}

inline const char* verdict_name(const Verdict& v) {
  if (std::holds_alternative<SplitWitness>(v)) return "split";
  if (std::holds_alternative<RankOneWitness>(v)) return "rank_one";
  return "inconclusive";
}

inline Json rank(const CubicalComplex& c, const RankReport& r) {
  Json out;
  out["verdict"] = verdict_name(r.verdict);
  if (const auto* s = std::get_if<SplitWitness>(&r.verdict)) {
    Json all = Json::array();
    for (const auto& b : s->all) all.push_back({{"T", color_list(b.t)}, {"S", color_list(b.s)}});
    out["bipartitions"] = all;
  } else if (const auto* w = std::get_if<RankOneWitness>(&r.verdict)) {
    out["path"] = path(c, w->path);
    out["colors"] = color_list(w->colors);
    out["basis"] = w->basis == RankOneBasis::AllColors ? "all_colors" : "strict_pi_junction";
    out["step"] = w->step;
    out["vertex"] = w->at;
  } else {
    const auto& i = std::get<Inconclusive>(r.verdict);
    out["reason"] = i.reason;
    out["length_cap"] = i.length_cap;
    out["nodes"] = i.nodes;
  }
  out["folding"] = folding(r.folding_used);
  Json diag;
  diag["steps"] = r.steps;
  diag["partition_counts"] = r.partition_counts;
  if (r.single_class_vertex) diag["single_class_vertex"] = *r.single_class_vertex;
  Json cov = Json::array();
  for (const auto& row : r.covering) {
    cov.push_back({{"color", row.color},
                   {"maps", row.maps},
                   {"coverings", row.coverings},
                   {"all_covering", row.all_covering}});
  }
  diag["covering"] = cov;
  out["diagnostics"] = diag;
  return out;
}

}  // namespace fcc::report

#endif  // FCC_REPORT_HPP
