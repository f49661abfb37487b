#ifndef FCC_GEODESIC_HPP
#define FCC_GEODESIC_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/decomposition.hpp"
#include "fcc/folding.hpp"
#include "fcc/io.hpp"
#include "fcc/link.hpp"

namespace fcc {

/// Link distance between two directions at a vertex, up to the four classes
/// that matter for geodesics: equal, pi/2, exactly pi, more than pi.
enum class DistanceClass { Zero, Quarter, Pi, MoreThanPi };

inline const char* to_string(DistanceClass d) {
  switch (d) {
    case DistanceClass::Zero: return "Zero";
    case DistanceClass::Quarter: return "Quarter";
    case DistanceClass::Pi: return "Pi";
    case DistanceClass::MoreThanPi: return "MoreThanPi";
  }
  return "?";
}

inline bool at_least_pi(DistanceClass d) { return d == DistanceClass::Pi || d == DistanceClass::MoreThanPi; }

/// Classifier on a prepared vertex star, by local edge index.
inline DistanceClass distance_class(const VertexStar& star, std::size_t a, std::size_t b) {
  if (a == b) return DistanceClass::Zero;
  if (star.adjacent(a, b)) return DistanceClass::Quarter;
  if (star.have_common_neighbour(a, b)) return DistanceClass::Pi;
  return DistanceClass::MoreThanPi;
}

inline DistanceClass distance_class(const CubicalComplex& c, VertexId v, const LinkVertex& d1, const LinkVertex& d2) {
  require_vertex(c, v);
  if (d1.at != v || d2.at != v || tail(c, d1.direction) != v || tail(c, d2.direction) != v) {
    throw Error(ErrorKind::MismatchedBase, "directions do not both leave vertex " + std::to_string(v));
  }
  VertexStar star(c, v);
  return distance_class(star, *star.local_index(d1.direction.edge), *star.local_index(d2.direction.edge));
}

inline DistanceClass distance_class(const CubicalComplex& c, OrientedEdge a, OrientedEdge b) {
  const VertexId v = tail(c, a);
  return distance_class(c, v, {v, a}, {tail(c, b), b});
}

inline VertexId path_end(const CubicalComplex& c, const EdgePath& p) {
  return p.steps.empty() ? p.base : head(c, p.steps.back());
}

/// Concatenation: `first` is traversed before `second`.
inline EdgePath then(const CubicalComplex& c, EdgePath first, const EdgePath& second) {
  if (path_end(c, first) != second.base) {
    throw Error(ErrorKind::ConstructionFailed, "concatenated paths do not meet");
  }
  first.steps.insert(first.steps.end(), second.steps.begin(), second.steps.end());
  first.closed = false;
  return first;
}

inline EdgePath reversed(const CubicalComplex& c, const EdgePath& p) {
  EdgePath out;
  out.base = path_end(c, p);
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) out.steps.push_back(it->reversed());
  out.closed = p.closed;
  return out;
}

inline EdgePath closed_path(const CubicalComplex& c, EdgePath p) {
  if (path_end(c, p) != p.base) throw Error(ErrorKind::ConstructionFailed, "path does not return to its base");
  p.closed = true;
  return p;
}

/// Checks the incidence chain and, when closed, that the walk returns to its base.
inline bool is_valid_path(const CubicalComplex& c, const EdgePath& p) {
  if (p.base >= c.vertex_count()) return false;
  VertexId at = p.base;
  for (const auto& step : p.steps) {
    if (step.edge >= c.count(1) || tail(c, step) != at) return false;
    at = head(c, step);
  }
  return !p.closed || at == p.base;
}

struct GeodesicCheck {
  bool geodesic = true;
  std::optional<std::size_t> junction;  ///< step index whose start is the failing junction
  DistanceClass angle = DistanceClass::MoreThanPi;
};

/// A 1-skeleton path is locally geodesic iff consecutive directions are at
/// least pi apart at every junction (and at the base when closed).
inline GeodesicCheck is_local_geodesic(const CubicalComplex& c, const EdgePath& p) {
  GeodesicCheck out;
  if (!is_valid_path(c, p)) {
    out.geodesic = false;
    out.junction = 0;
    out.angle = DistanceClass::Zero;
    return out;
  }
  const std::size_t len = p.steps.size();
  const std::size_t junctions = p.closed ? len : (len == 0 ? 0 : len - 1);
  for (std::size_t t = 0; t < junctions; ++t) {
    const OrientedEdge in = p.steps[t];
    const OrientedEdge out_edge = p.steps[(t + 1) % len];
    const auto d = distance_class(c, in.reversed(), out_edge);
    if (!at_least_pi(d)) {
      out.geodesic = false;
      out.junction = (t + 1) % len;
      out.angle = d;
      return out;
    }
  }
  return out;
}

/// Colors used by a path.
inline ColorSet path_colors(const EdgeColoring& coloring, const EdgePath& p) {
  ColorSet used = 0;
  for (const auto& step : p.steps) used |= color_bit(coloring.color_of[step.edge]);
  return used;
}

inline ColorSet all_colors(std::size_t n) { return n >= 32 ? ~ColorSet{0} : (ColorSet{1} << n) - 1; }

/// True iff p is a closed local geodesic whose edges use every color; such a
/// path is a closed rank one geodesic.
inline bool rank_one_certificate(const CubicalComplex& c, const EdgeColoring& coloring, const EdgePath& p) {
  if (!p.closed) throw Error(ErrorKind::NotClosed, "certificate needs a closed path");
  if (p.steps.empty()) return false;
  return is_local_geodesic(c, p).geodesic && path_colors(coloring, p) == all_colors(coloring.colors);
}

/// True iff p is a closed local geodesic with a junction whose angle exceeds
/// pi between edges of different colors (such a geodesic bounds no flat
/// half-plane).
inline bool has_strict_pi_junction(const CubicalComplex& c, const EdgeColoring& coloring, const EdgePath& p) {
  if (!p.closed || p.steps.empty() || !is_local_geodesic(c, p).geodesic) return false;
  const std::size_t len = p.steps.size();
  for (std::size_t t = 0; t < len; ++t) {
    const OrientedEdge in = p.steps[t].reversed();
    const OrientedEdge out = p.steps[(t + 1) % len];
    if (coloring.color_of[in.edge] != coloring.color_of[out.edge] &&
        distance_class(c, in, out) == DistanceClass::MoreThanPi) {
      return true;
    }
  }
  return false;
}

/// Directions perpendicular to e at its tail, and their transfer to the head
/// across the square they span with e.
struct TransferMap {
  OrientedEdge e;
  std::vector<OrientedEdge> from;  ///< leave tail(e), ascending edge index
  std::vector<OrientedEdge> to;    ///< leave head(e), to[k] = D_e(from[k])
  std::vector<CubeIndex> square;   ///< the square carrying from[k]

  std::optional<OrientedEdge> operator()(OrientedEdge xi) const {
    for (std::size_t k = 0; k < from.size(); ++k) {
      if (from[k] == xi) return to[k];
    }
    return std::nullopt;
  }
};

inline TransferMap transfer(const CubicalComplex& c, OrientedEdge e) {
  if (e.edge >= c.count(1)) throw Error(ErrorKind::UnknownVertex, "edge out of range");
  TransferMap out;
  out.e = e;
  const VertexId v = tail(c, e);
  const VertexId w = head(c, e);
  std::vector<std::pair<OrientedEdge, std::pair<OrientedEdge, CubeIndex>>> pairs;
  for (CubeIndex sq : c.cofaces(1, e.edge)) {
    auto f = c.facets(2, sq);
    // f[0],f[1] and f[2],f[3] are the opposite pairs
    for (std::size_t a = 0; a < 4; ++a) {
      const CubeIndex side = f[a];
      const CubeIndex opposite = f[a ^ 1];
      if (side == e.edge || opposite == e.edge) continue;
      auto sc = c.corners(1, side);
      if (sc[0] != v && sc[1] != v) continue;
      pairs.push_back({leaving(c, side, v), {leaving(c, opposite, w), sq}});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [a, b] : pairs) {
    out.from.push_back(a);
    out.to.push_back(b.first);
    out.square.push_back(b.second);
  }
  return out;
}

/// Why graph_connector refused.
enum class ConnectorStatus { Ok, IsCircle, NotConnected, LowValence };

namespace detail {

/// Vertices of the subgraph given by `allowed` edges that are reachable from v.
inline std::vector<VertexId> reachable(const CubicalComplex& c, const std::vector<char>& allowed, VertexId v) {
  std::vector<char> seen(c.vertex_count(), 0);
  std::vector<VertexId> order{v};
  seen[v] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (CubeIndex e : c.edges_at(order[i])) {
      if (!allowed[e]) continue;
      const VertexId w = c.edge_other(e, order[i]);
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

inline std::size_t allowed_degree(const CubicalComplex& c, const std::vector<char>& allowed, VertexId v) {
  std::size_t d = 0;
  for (CubeIndex e : c.edges_at(v)) d += allowed[e] ? 1 : 0;
  return d;
}

}  // namespace detail

/// Checks the hypotheses on the component of the `allowed` subgraph that
/// contains e1: e2 in it, valence at least two, not a circle.
inline ConnectorStatus connector_status(const CubicalComplex& c, const std::vector<char>& allowed, OrientedEdge e1,
                                        OrientedEdge e2) {
  const auto comp = detail::reachable(c, allowed, tail(c, e1));
  if (!allowed[e1.edge] || !allowed[e2.edge] || !std::binary_search(comp.begin(), comp.end(), tail(c, e2))) {
    return ConnectorStatus::NotConnected;
  }
  bool all_two = true;
  for (VertexId v : comp) {
    const std::size_t d = detail::allowed_degree(c, allowed, v);
    if (d < 2) return ConnectorStatus::LowValence;
    if (d != 2) all_two = false;
  }
  return all_two ? ConnectorStatus::IsCircle : ConnectorStatus::Ok;
}

/// Shortest walk c from t(e1) to t(e2) inside the allowed subgraph such that
/// the walk e1, c, reverse(e2) never backtracks. Breadth-first search over
/// oriented edges, neighbours in ascending edge order.
inline EdgePath graph_connector(const CubicalComplex& c, const std::vector<char>& allowed, OrientedEdge e1,
                                OrientedEdge e2) {
  switch (connector_status(c, allowed, e1, e2)) {
    case ConnectorStatus::Ok: break;
    case ConnectorStatus::IsCircle: throw Error(ErrorKind::IsCircle, "the graph is a circle");
    case ConnectorStatus::NotConnected: throw Error(ErrorKind::NotConnected, "edges lie in different components");
    case ConnectorStatus::LowValence: throw Error(ErrorKind::PreconditionFailed, "graph has a vertex of valence < 2");
  }
  auto state = [](OrientedEdge e) { return 2 * e.edge + (e.head_is_corner1 ? 1 : 0); };
  auto edge_of = [](std::size_t s) { return OrientedEdge{s / 2, (s & 1u) != 0}; };
  const VertexId goal = head(c, e2);
  auto is_goal = [&](OrientedEdge s) { return head(c, s) == goal && s != e2; };

  EdgePath out;
  out.base = head(c, e1);
  if (is_goal(e1)) return out;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> prev(2 * c.count(1), none);
  const std::size_t start = state(e1);
  prev[start] = start;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const OrientedEdge cur = edge_of(s);
    const VertexId at = head(c, cur);
    for (CubeIndex e : c.edges_at(at)) {
      if (!allowed[e] || e == cur.edge) continue;
      const OrientedEdge next = leaving(c, e, at);
      const std::size_t t = state(next);
      if (prev[t] != none) continue;
      prev[t] = s;
      if (is_goal(next)) {
        std::vector<OrientedEdge> steps;
        for (std::size_t x = t; x != start; x = prev[x]) steps.push_back(edge_of(x));
        out.steps.assign(steps.rbegin(), steps.rend());
        return out;
      }
      queue.push_back(t);
    }
  }
  throw Error(ErrorKind::ConstructionFailed, "no non-backtracking connector found");
}

/// Version for a 1-dimensional complex: every edge is allowed.
inline EdgePath graph_connector(const CubicalComplex& g, OrientedEdge e1, OrientedEdge e2) {
  return graph_connector(g, std::vector<char>(g.count(1), 1), e1, e2);
}

/// Edges of the single-color subgraph X_{i,v}: color-i edges in the component of v.
inline std::vector<char> color_component_edges(const CubicalComplex& c, const EdgeColoring& coloring, int color,
                                               VertexId v) {
  std::vector<char> same(c.count(1), 0);
  for (CubeIndex e = 0; e < c.count(1); ++e) same[e] = coloring.color_of[e] == color;
  const auto comp = detail::reachable(c, same, v);
  std::vector<char> out(c.count(1), 0);
  for (VertexId u : comp) {
    for (CubeIndex e : c.edges_at(u)) out[e] = same[e];
  }
  return out;
}

/// e, then a loop at t(e) in the allowed subgraph, then reverse(e). A local
/// geodesic from tail(e) back to tail(e), though not a closed one: its ends
/// meet at angle zero.
inline EdgePath loop_through(const CubicalComplex& c, const std::vector<char>& allowed, OrientedEdge e) {
  EdgePath out;
  out.base = tail(c, e);
  out.steps.push_back(e);
  auto loop = graph_connector(c, allowed, e, e);
  out.steps.insert(out.steps.end(), loop.steps.begin(), loop.steps.end());
  out.steps.push_back(e.reversed());
  return out;
}

/// Closed local geodesic leaving v along e and returning along another
/// allowed edge at v: e, a connector, then the reverse of that edge.
inline EdgePath closed_loop_from(const CubicalComplex& c, const std::vector<char>& allowed, OrientedEdge e) {
  const VertexId v = tail(c, e);
  for (CubeIndex other : c.edges_at(v)) {
    if (!allowed[other] || other == e.edge) continue;
    const OrientedEdge e2 = leaving(c, other, v);
    EdgePath out;
    out.base = v;
    out.steps.push_back(e);
    auto mid = graph_connector(c, allowed, e, e2);
    out.steps.insert(out.steps.end(), mid.steps.begin(), mid.steps.end());
    out.steps.push_back(e2.reversed());
    out.closed = true;
    return out;
  }
  throw Error(ErrorKind::PreconditionFailed, "vertex has a single allowed edge");
}

/// Traverses the circle of allowed edges through v once, leaving along `first`.
inline EdgePath circle_through(const CubicalComplex& c, const std::vector<char>& allowed, OrientedEdge first) {
  EdgePath out;
  out.base = tail(c, first);
  OrientedEdge cur = first;
  out.steps.push_back(cur);
  while (head(c, cur) != out.base) {
    const VertexId at = head(c, cur);
    std::optional<OrientedEdge> next;
    for (CubeIndex e : c.edges_at(at)) {
      if (allowed[e] && e != cur.edge) next = leaving(c, e, at);
    }
    cur = *next;
    out.steps.push_back(cur);
  }
  out.closed = true;
  return out;
}

/// A witness pair for i ~_v j: directions at v of colors i and j at least pi apart.
struct SimWitness {
  int color_a = 0;
  int color_b = 0;
  OrientedEdge a;
  OrientedEdge b;
  DistanceClass angle = DistanceClass::Pi;
};

struct SimClasses {
  VertexId at = 0;
  std::vector<std::vector<int>> classes;  ///< ascending, ordered by least color
  std::vector<SimWitness> witnesses;      ///< first witness per related color pair (i < j)
};

/// Partition of the colors under the equivalence generated by ~_v.
inline SimClasses sim_v_classes(const CubicalComplex& c, const EdgeColoring& coloring, VertexId v) {
  require_vertex(c, v);
  const std::size_t n = coloring.colors;
  VertexStar star(c, v);
  DisjointSets sets(n + 1);
  std::map<std::pair<int, int>, SimWitness> first;
  for (std::size_t a = 0; a < star.degree(); ++a) {
    for (std::size_t b = a + 1; b < star.degree(); ++b) {
      const int ca = coloring.color_of[star.edge(a)];
      const int cb = coloring.color_of[star.edge(b)];
      if (ca == cb) continue;
      const auto d = distance_class(star, a, b);
      if (!at_least_pi(d)) continue;
      sets.unite(static_cast<std::size_t>(ca), static_cast<std::size_t>(cb));
      const auto key = std::minmax(ca, cb);
      if (!first.count(key)) {
        SimWitness w{ca, cb, leaving(c, star.edge(a), v), leaving(c, star.edge(b), v), d};
        if (ca > cb) {
          std::swap(w.color_a, w.color_b);
          std::swap(w.a, w.b);
        }
        first.emplace(key, w);
      }
    }
  }
  SimClasses out;
  out.at = v;
  std::vector<std::size_t> slot(n + 1, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t r = sets.find(i);
    if (slot[r] == std::numeric_limits<std::size_t>::max()) {
      slot[r] = out.classes.size();
      out.classes.emplace_back();
    }
    out.classes[slot[r]].push_back(static_cast<int>(i));
  }
  for (auto& [key, w] : first) out.witnesses.push_back(w);
  return out;
}

/// Closed local geodesic at v using an edge of every color in T, where T is
/// one class of the equivalence generated by ~_v. Built inductively: each new
/// color is spliced in through loops in single-color subgraphs.
inline EdgePath build_all_color_geodesic(const CubicalComplex& c, const EdgeColoring& coloring, VertexId v,
                                         std::vector<int> t) {
  auto sim = sim_v_classes(c, coloring, v);
  std::sort(t.begin(), t.end());
  if (std::find(sim.classes.begin(), sim.classes.end(), t) == sim.classes.end()) {
    throw Error(ErrorKind::NotSingleClass, "colors do not form one equivalence class at vertex " + std::to_string(v));
  }
  // order T so every color after the first is related to an earlier one
  std::vector<int> order{t.front()};
  std::vector<SimWitness> link_of{SimWitness{}};
  while (order.size() < t.size()) {
    bool grew = false;
    for (const auto& w : sim.witnesses) {
      const bool has_a = std::find(order.begin(), order.end(), w.color_a) != order.end();
      const bool has_b = std::find(order.begin(), order.end(), w.color_b) != order.end();
      if (has_a == has_b) continue;
      SimWitness oriented = w;
      if (has_b) {
        std::swap(oriented.color_a, oriented.color_b);
        std::swap(oriented.a, oriented.b);
      }
      order.push_back(oriented.color_b);  // color_a is the earlier color
      link_of.push_back(oriented);
      grew = true;
      break;
    }
    if (!grew) throw Error(ErrorKind::ConstructionFailed, "class ordering failed");
  }

  auto single_color = [&](int color) { return color_component_edges(c, coloring, color, v); };
  auto leaving_with_color = [&](int color) {
    for (CubeIndex e : c.edges_at(v)) {
      if (coloring.color_of[e] == color) return leaving(c, e, v);
    }
    throw Error(ErrorKind::ConstructionFailed, "no edge of color " + std::to_string(color) + " at vertex");
  };

  EdgePath path;
  {
    const int color = order.front();
    const auto allowed = single_color(color);
    const auto e = leaving_with_color(color);
    path = connector_status(c, allowed, e, e) == ConnectorStatus::IsCircle ? circle_through(c, allowed, e)
                                                                           : closed_loop_from(c, allowed, e);
  }
  for (std::size_t k = 1; k < order.size(); ++k) {
    const SimWitness& w = link_of[k];
    const OrientedEdge ej_prime = w.a;  // color i_j, already present
    const OrientedEdge ek = w.b;        // new color i_k
    // rotate (and possibly reverse) the current loop to leave v along an i_j edge
    std::optional<EdgePath> rotated;
    auto rotate_to = [&](const EdgePath& p, std::size_t at) {
      EdgePath r;
      r.base = v;
      r.closed = true;
      for (std::size_t s = 0; s < p.steps.size(); ++s) r.steps.push_back(p.steps[(at + s) % p.steps.size()]);
      return r;
    };
    const auto back = reversed(c, path);
    for (int pass = 0; pass < 2 && !rotated; ++pass) {
      // prefer the witness edge itself, then any edge of color i_j at v
      for (const EdgePath* p : std::initializer_list<const EdgePath*>{&path, &back}) {
        for (std::size_t s = 0; s < p->steps.size() && !rotated; ++s) {
          const OrientedEdge step = p->steps[s];
          if (tail(c, step) != v || coloring.color_of[step.edge] != w.color_a) continue;
          if (pass == 0 && step != ej_prime) continue;
          rotated = rotate_to(*p, s);
        }
        if (rotated) break;
      }
    }
    if (!rotated) throw Error(ErrorKind::ConstructionFailed, "loop lost its edge at the base vertex");
    const OrientedEdge ej = rotated->steps.front();
    const auto allowed_j = single_color(w.color_a);
    const auto allowed_k = single_color(w.color_b);
    const EdgePath c1 = loop_through(c, allowed_k, ek);
    const EdgePath c2 = loop_through(c, allowed_j, ej_prime);
    EdgePath next;
    if (ej != ej_prime) {
      const EdgePath c3 = loop_through(c, allowed_j, ej);
      next = then(c, then(c, then(c, then(c, c1, c2), *rotated), c3), c2);
    } else {
      next = then(c, then(c, *rotated, c2), c1);
    }
    path = closed_path(c, next);
  }
  auto check = is_local_geodesic(c, path);
  if (!check.geodesic) {
    throw Error(ErrorKind::ConstructionFailed, "constructed loop has a " + std::string(to_string(check.angle)) +
                                                   " junction at step " + std::to_string(*check.junction));
  }
  for (int color : t) {
    if (!(path_colors(coloring, path) & color_bit(color))) {
      throw Error(ErrorKind::ConstructionFailed, "constructed loop misses color " + std::to_string(color));
    }
  }
  return path;
}

/// Closed local geodesic through two differently colored directions at v
/// more than pi apart: e1, loop, reverse(e1), then e2, loop, reverse(e2).
inline EdgePath build_strict_pi_geodesic(const CubicalComplex& c, const EdgeColoring& coloring, VertexId v,
                                         OrientedEdge e1, OrientedEdge e2) {
  require_vertex(c, v);
  if (tail(c, e1) != v || tail(c, e2) != v) {
    throw Error(ErrorKind::PreconditionFailed, "directions must leave vertex " + std::to_string(v));
  }
  const int i = coloring.color_of[e1.edge];
  const int j = coloring.color_of[e2.edge];
  if (i == j) throw Error(ErrorKind::PreconditionFailed, "directions have the same color");
  if (distance_class(c, e1, e2) != DistanceClass::MoreThanPi) {
    throw Error(ErrorKind::PreconditionFailed, "directions are not more than pi apart");
  }
  const EdgePath c1 = loop_through(c, color_component_edges(c, coloring, i, v), e1);
  const EdgePath c2 = loop_through(c, color_component_edges(c, coloring, j, v), e2);
  EdgePath path = closed_path(c, then(c, c1, c2));
  auto check = is_local_geodesic(c, path);
  if (!check.geodesic) {
    throw Error(ErrorKind::ConstructionFailed, "strict-pi loop has a bad junction at step " +
                                                   std::to_string(*check.junction));
  }
  return path;
}

}  // namespace fcc

#endif  // FCC_GEODESIC_HPP
