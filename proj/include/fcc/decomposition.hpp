#ifndef FCC_DECOMPOSITION_HPP
#define FCC_DECOMPOSITION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/folding.hpp"

namespace fcc {

using ColorSet = std::uint32_t;  ///< bit i-1 = color i

inline ColorSet color_bit(int color) { return ColorSet{1} << (color - 1); }

/// Colors occurring among the edges of each cube, per dimension.
inline std::vector<std::vector<ColorSet>> cube_color_masks(const CubicalComplex& c, const EdgeColoring& coloring) {
  std::vector<std::vector<ColorSet>> masks(c.dimension() + 1);
  if (c.dimension() == 0) return masks;
  masks[0].assign(c.vertex_count(), 0);
  masks[1].resize(c.count(1));
  for (CubeIndex e = 0; e < c.count(1); ++e) masks[1][e] = color_bit(coloring.color_of[e]);
  for (std::size_t k = 2; k <= c.dimension(); ++k) {
    masks[k].assign(c.count(k), 0);
    for (CubeIndex q = 0; q < c.count(k); ++q) {
      for (CubeIndex f : c.facets(k, q)) masks[k][q] |= masks[k - 1][f];
    }
  }
  return masks;
}

/// X_T: the cubes whose edges all have colors in T, on every vertex of the
/// parent (same vertex ids).
struct Subcomplex {
  ColorSet colors = 0;
  std::vector<std::vector<char>> keep;  ///< per dimension, per parent cube
  Component induced;                    ///< identity on vertices
};

inline void require_color_set(ColorSet t, std::size_t colors) {
  const ColorSet all = colors >= 32 ? ~ColorSet{0} : (ColorSet{1} << colors) - 1;
  if (t == 0 || (t & ~all) != 0) {
    throw Error(ErrorKind::BadColorSet, "color set must be a nonempty subset of 1.." + std::to_string(colors));
  }
}

inline Subcomplex subcomplex_XT(const CubicalComplex& c, const EdgeColoring& coloring, ColorSet t) {
  require_color_set(t, coloring.colors);
  Subcomplex out;
  out.colors = t;
  const auto masks = cube_color_masks(c, coloring);
  out.keep.resize(c.dimension() + 1);
  for (std::size_t k = 1; k <= c.dimension(); ++k) {
    out.keep[k].resize(c.count(k));
    for (CubeIndex q = 0; q < c.count(k); ++q) out.keep[k][q] = (masks[k][q] & ~t) == 0;
  }
  std::vector<VertexId> all(c.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  out.induced = induced_subcomplex(c, all, out.keep);
  return out;
}

/// Components of X_T with their maps to the parent complex.
inline std::vector<Component> components_XT(const CubicalComplex& c, const EdgeColoring& coloring, ColorSet t) {
  auto sub = subcomplex_XT(c, coloring, t);
  auto parts = components(sub.induced.complex);
  // compose the maps so they point into c
  for (auto& part : parts) {
    for (std::size_t k = 1; k < part.cube_to_parent.size(); ++k) {
      for (auto& idx : part.cube_to_parent[k]) idx = sub.induced.cube_to_parent[k][idx];
    }
  }
  return parts;
}

/// H_i: vertices are the color-i edges of X (their midpoints), and every
/// cube Q with an i-axis contributes its midcube. `carrier` sends a midcube
/// of dimension k-1 to Q.
struct HyperplaneComplex {
  int color = 0;
  CubicalComplex complex;
  std::vector<CubeIndex> edge_of;                ///< vertex -> color-i edge of X
  std::vector<std::vector<CubeIndex>> carrier;   ///< per dimension k-1, midcube -> k-cube of X
};

namespace detail {

/// Axis of canonical cube (k, q) along which its edges have `color`, if any.
inline std::optional<std::size_t> axis_of_color(const CubicalComplex& c, const EdgeColoring& coloring, std::size_t k,
                                                CubeIndex q, int color) {
  auto cs = c.corners(k, q);
  for (std::size_t a = 0; a < k; ++a) {
    auto e = c.edge_between(cs[0], cs[std::size_t{1} << a]);
    if (e && coloring.color_of[*e] == color) return a;
  }
  return std::nullopt;
}

/// Midcube corners (as X-edge indices) of cube (k, q) across `axis`.
inline std::vector<CubeIndex> midcube_edges(const CubicalComplex& c, std::size_t k, CubeIndex q, std::size_t axis) {
  auto cs = c.corners(k, q);
  const std::size_t full = (std::size_t{1} << k) - 1;
  const std::size_t others = full ^ (std::size_t{1} << axis);
  std::vector<CubeIndex> out(std::size_t{1} << (k - 1));
  for (std::size_t b = 0; b < out.size(); ++b) {
    const std::size_t p = deposit(b, others);
    out[b] = *c.edge_between(cs[p], cs[p | (std::size_t{1} << axis)]);
  }
  return out;
}

}  // namespace detail

/// The whole of H_i (possibly disconnected).
inline HyperplaneComplex hyperplane_complex(const CubicalComplex& c, const EdgeColoring& coloring, int color) {
  if (color < 1 || static_cast<std::size_t>(color) > coloring.colors) {
    throw Error(ErrorKind::BadColorSet, "color " + std::to_string(color) + " out of range");
  }
  HyperplaneComplex h;
  h.color = color;
  std::vector<VertexId> local(c.count(1), std::numeric_limits<VertexId>::max());
  for (CubeIndex e = 0; e < c.count(1); ++e) {
    if (coloring.color_of[e] != color) continue;
    local[e] = static_cast<VertexId>(h.edge_of.size());
    h.edge_of.push_back(e);
  }
  std::vector<Cube> mids;
  std::vector<std::pair<std::size_t, CubeIndex>> source;
  for (std::size_t k = 2; k <= c.dimension(); ++k) {
    for (CubeIndex q = 0; q < c.count(k); ++q) {
      auto axis = detail::axis_of_color(c, coloring, k, q, color);
      if (!axis) continue;
      Cube mid{k - 1, {}};
      for (CubeIndex e : detail::midcube_edges(c, k, q, *axis)) mid.corners.push_back(local[e]);
      mids.push_back(std::move(mid));
      source.emplace_back(k, q);
    }
  }
  h.complex = CubicalComplex::build(h.edge_of.size(), mids, {.check_axioms = false, .close_faces = false});
  h.carrier.assign(h.complex.dimension() + 1, {});
  h.carrier[0].assign(h.edge_of.begin(), h.edge_of.end());
  for (std::size_t k = 1; k <= h.complex.dimension(); ++k) h.carrier[k].resize(h.complex.count(k));
  for (std::size_t m = 0; m < mids.size(); ++m) {
    auto idx = h.complex.find(mids[m].dim, mids[m].corners);
    h.carrier[mids[m].dim][*idx] = source[m].second;
  }
  return h;
}

/// One component Y of H_i, with carriers into X.
struct Hyperplane {
  Component piece;                              ///< maps into the H_i complex
  std::vector<CubeIndex> edge_of;               ///< vertex of Y -> color-i edge of X
  std::vector<std::vector<CubeIndex>> carrier;  ///< per dimension, cube of Y -> (k+1)-cube of X
};

inline std::vector<Hyperplane> hyperplanes(const CubicalComplex& c, const EdgeColoring& coloring, int color) {
  auto h = hyperplane_complex(c, coloring, color);
  std::vector<Hyperplane> out;
  for (auto& part : components(h.complex)) {
    Hyperplane y;
    for (VertexId w : part.to_parent) y.edge_of.push_back(h.edge_of[w]);
    y.carrier.resize(part.cube_to_parent.size());
    y.carrier[0] = y.edge_of;
    for (std::size_t k = 1; k < part.cube_to_parent.size(); ++k) {
      for (CubeIndex idx : part.cube_to_parent[k]) y.carrier[k].push_back(h.carrier[k][idx]);
    }
    y.piece = std::move(part);
    out.push_back(std::move(y));
  }
  return out;
}

/// Combinatorial map from an edge space Y to a vertex space B.
struct AttachingMap {
  std::vector<VertexId> vertex_map;            ///< vertex of Y -> vertex of B
  std::vector<std::vector<CubeIndex>> cube_map;  ///< per dimension, cube of Y -> cube of B
};

struct SpaceEdge {
  std::size_t hyperplane = 0;  ///< index into edge_spaces
  std::size_t side0 = 0;       ///< index into vertex_spaces
  std::size_t side1 = 0;
  AttachingMap attach0;
  AttachingMap attach1;
};

/// Graph of spaces for color i: vertex spaces are the components of X_{T_i}
/// (T_i = all colors but i), edge spaces the components of H_i.
struct GraphOfSpaces {
  int color = 0;
  std::vector<Component> vertex_spaces;
  std::vector<Hyperplane> edge_spaces;
  std::vector<SpaceEdge> edges;  ///< one per edge space, same order

  /// Connectivity of the base multigraph.
  bool base_connected() const {
    if (vertex_spaces.empty()) return false;
    DisjointSets sets(vertex_spaces.size());
    std::size_t merges = 0;
    for (const auto& e : edges) merges += sets.unite(e.side0, e.side1);
    return merges + 1 == vertex_spaces.size();
  }
};

/// Orients each hyperplane by transporting "side 0" across squares, starting
/// at its least edge whose side 0 is the smaller endpoint. Throws NotFCC when
/// the transport is inconsistent (a one-sided hyperplane).
inline GraphOfSpaces graph_of_spaces(const CubicalComplex& c, const EdgeColoring& coloring, int color) {
  if (c.dimension() == 0) throw Error(ErrorKind::NotFCC, "graph of spaces needs positive dimension");
  GraphOfSpaces g;
  g.color = color;
  const ColorSet others = (coloring.colors >= 32 ? ~ColorSet{0} : (ColorSet{1} << coloring.colors) - 1) & ~color_bit(color);
  if (others != 0) {
    g.vertex_spaces = components_XT(c, coloring, others);
  } else {
    // one color only: X_{T_i} is the discrete vertex set
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
      Component point;
      point.complex = CubicalComplex::build(1, {}, {});
      point.to_parent = {v};
      point.cube_to_parent = {{v}};
      g.vertex_spaces.push_back(std::move(point));
    }
  }
  g.edge_spaces = hyperplanes(c, coloring, color);
  const auto masks = cube_color_masks(c, coloring);

  // locate parent vertices and cubes inside vertex spaces
  std::vector<std::size_t> space_of(c.vertex_count());
  std::vector<VertexId> local_vertex(c.vertex_count());
  std::vector<std::vector<CubeIndex>> local_cube(c.dimension() + 1);
  for (std::size_t k = 1; k <= c.dimension(); ++k) local_cube[k].assign(c.count(k), std::numeric_limits<CubeIndex>::max());
  for (std::size_t s = 0; s < g.vertex_spaces.size(); ++s) {
    const auto& b = g.vertex_spaces[s];
    for (VertexId w = 0; w < b.to_parent.size(); ++w) {
      space_of[b.to_parent[w]] = s;
      local_vertex[b.to_parent[w]] = w;
    }
    for (std::size_t k = 1; k < b.cube_to_parent.size(); ++k) {
      for (CubeIndex q = 0; q < b.cube_to_parent[k].size(); ++q) local_cube[k][b.cube_to_parent[k][q]] = q;
    }
  }

  for (std::size_t y = 0; y < g.edge_spaces.size(); ++y) {
    const auto& hp = g.edge_spaces[y];
    const auto& yc = hp.piece.complex;
    // side0[w]: endpoint of edge w of X lying on side 0
    std::vector<VertexId> side0(yc.vertex_count(), std::numeric_limits<VertexId>::max());
    side0[0] = c.corners(1, hp.edge_of[0])[0];
    std::deque<VertexId> queue{0};
    auto transported = [&](CubeIndex square, VertexId from_w, VertexId to_w) {
      // the two edges of the square that are not color-i pair up endpoints
      const CubeIndex e_to = hp.edge_of[to_w];
      for (CubeIndex f : c.facets(2, square)) {
        if (f == hp.edge_of[from_w] || f == e_to) continue;
        auto fc = c.corners(1, f);
        if (fc[0] == side0[from_w]) return fc[1];
        if (fc[1] == side0[from_w]) return fc[0];
      }
      throw Error(ErrorKind::NotFCC, "hyperplane square without matching sides");
    };
    while (!queue.empty()) {
      const VertexId w = queue.front();
      queue.pop_front();
      for (CubeIndex m : yc.edges_at(w)) {
        const VertexId u = yc.edge_other(m, w);
        const VertexId side = transported(hp.carrier[1][m], w, u);
        if (side0[u] == std::numeric_limits<VertexId>::max()) {
          side0[u] = side;
          queue.push_back(u);
        } else if (side0[u] != side) {
          throw Error(ErrorKind::NotFCC, "hyperplane " + std::to_string(y) + " of color " + std::to_string(color) +
                                             " is one-sided");
        }
      }
    }
    SpaceEdge edge;
    edge.hyperplane = y;
    for (int side = 0; side < 2; ++side) {
      AttachingMap map;
      map.vertex_map.resize(yc.vertex_count());
      std::size_t space = 0;
      for (VertexId w = 0; w < yc.vertex_count(); ++w) {
        const VertexId x = side == 0 ? side0[w] : c.edge_other(hp.edge_of[w], side0[w]);
        space = space_of[x];
        map.vertex_map[w] = local_vertex[x];
      }
      map.cube_map.resize(yc.dimension() + 1);
      map.cube_map[0].assign(map.vertex_map.begin(), map.vertex_map.end());
      for (std::size_t k = 1; k <= yc.dimension(); ++k) {
        map.cube_map[k].resize(yc.count(k));
        for (CubeIndex q = 0; q < yc.count(k); ++q) {
          const CubeIndex parent = hp.carrier[k][q];
          // the facet of the carrier containing this side's endpoints
          const VertexId anchor = side == 0 ? side0[yc.corners(k, q)[0]]
                                            : c.edge_other(hp.edge_of[yc.corners(k, q)[0]], side0[yc.corners(k, q)[0]]);
          CubeIndex face = std::numeric_limits<CubeIndex>::max();
          for (CubeIndex f : c.facets(k + 1, parent)) {
            auto fc = c.corners(k, f);
            if (std::find(fc.begin(), fc.end(), anchor) == fc.end()) continue;
            if (!(masks[k][f] & color_bit(color))) {
              face = f;
              break;
            }
          }
          map.cube_map[k][q] = local_cube[k][face];
        }
      }
      (side == 0 ? edge.side0 : edge.side1) = space;
      (side == 0 ? edge.attach0 : edge.attach1) = std::move(map);
    }
    g.edges.push_back(std::move(edge));
  }
  return g;
}

/// Distinct cubes at each vertex of Y have distinct images.
inline bool is_locally_injective(const CubicalComplex& y, const AttachingMap& g) {
  std::vector<CubeIndex> images;
  for (VertexId w = 0; w < y.vertex_count(); ++w) {
    for (std::size_t k = 1; k <= y.dimension(); ++k) {
      images.clear();
      for (CubeIndex q : y.star(w, k)) images.push_back(g.cube_map[k][q]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    }
  }
  return true;
}

struct CoveringCheck {
  bool covering = true;
  VertexId vertex = 0;  ///< w in Y
  CubeRef missed;       ///< cube of B at g(w) hit by no cube at w
};

/// g is a covering iff at every vertex w of Y the star of w maps onto the
/// star of g(w). Edges are checked before higher cubes so a failure reports
/// a missed edge whenever there is one.
inline CoveringCheck is_covering(const CubicalComplex& y, const CubicalComplex& b, const AttachingMap& g) {
  std::vector<CubeIndex> images;
  for (std::size_t k = 1; k <= std::max(b.dimension(), std::size_t{1}); ++k) {
    for (VertexId w = 0; w < y.vertex_count(); ++w) {
      images.clear();
      for (CubeIndex q : y.star(w, k)) images.push_back(g.cube_map[k][q]);
      std::sort(images.begin(), images.end());
      for (CubeIndex target : b.star(g.vertex_map[w], k)) {
        if (!std::binary_search(images.begin(), images.end(), target)) return {false, w, CubeRef{k, target}};
      }
    }
  }
  return {};
}

}  // namespace fcc

#endif  // FCC_DECOMPOSITION_HPP
