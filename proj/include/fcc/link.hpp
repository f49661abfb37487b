#ifndef FCC_LINK_HPP
#define FCC_LINK_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/simplicial.hpp"

namespace fcc {

/// An edge with an orientation. The canonical corners of an edge are
/// ascending, so `head_is_corner1` means the edge runs from the smaller
/// vertex id to the larger.
struct OrientedEdge {
  CubeIndex edge = 0;
  bool head_is_corner1 = true;

  OrientedEdge reversed() const { return {edge, !head_is_corner1}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

inline VertexId tail(const CubicalComplex& c, OrientedEdge e) {
  return c.corners(1, e.edge)[e.head_is_corner1 ? 0 : 1];
}
inline VertexId head(const CubicalComplex& c, OrientedEdge e) {
  return c.corners(1, e.edge)[e.head_is_corner1 ? 1 : 0];
}

/// The oriented edge `edge` leaving `from`.
inline OrientedEdge leaving(const CubicalComplex& c, CubeIndex edge, VertexId from) {
  return {edge, c.corners(1, edge)[0] == from};
}

/// A direction at a vertex: the point of Link(X, at) represented by an edge
/// leaving `at`.
struct LinkVertex {
  VertexId at = 0;
  OrientedEdge direction;
  friend bool operator==(const LinkVertex&, const LinkVertex&) = default;
};

/// Link of a vertex: its vertices are the edges leaving `at` (ascending edge
/// index) and a set of them spans a simplex iff some cube has `at` as a corner
/// with exactly those incident edges.
struct VertexLink {
  VertexId at = 0;
  std::vector<OrientedEdge> directions;
  SimplicialComplex complex;
};

inline void require_vertex(const CubicalComplex& c, VertexId v) {
  if (v >= c.vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " not in complex of " +
                                              std::to_string(c.vertex_count()) + " vertices");
  }
}

/// Local indices (into edges_at(v)) of the edges of cube (k, i) at its corner v.
inline std::vector<std::uint32_t> edges_of_cube_at(const CubicalComplex& c, std::size_t k, CubeIndex i, VertexId v) {
  const auto pos = c.corner_position(k, i, v);
  const auto incident = c.edges_at(v);
  auto cs = c.corners(k, i);
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < k; ++j) {
    const VertexId w = cs[*pos ^ (std::size_t{1} << j)];
    for (std::size_t l = 0; l < incident.size(); ++l) {
      if (c.edge_other(incident[l], v) == w) {
        out.push_back(static_cast<std::uint32_t>(l));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexLink link(const CubicalComplex& c, VertexId v) {
  require_vertex(c, v);
  VertexLink out;
  out.at = v;
  for (CubeIndex e : c.edges_at(v)) out.directions.push_back(leaving(c, e, v));
  std::vector<Simplex> simplices;
  for (std::size_t k = 1; k <= c.dimension(); ++k) {
    for (CubeIndex q : c.star(v, k)) {
      if (c.is_maximal(k, q)) simplices.push_back(edges_of_cube_at(c, k, q, v));
    }
  }
  out.complex = SimplicialComplex::from_simplices(out.directions.size(), simplices);
  return out;
}

/// 1-skeleton of the link at a vertex, for repeated pairwise queries.
class VertexStar {
 public:
  VertexStar() = default;

  VertexStar(const CubicalComplex& c, VertexId v) : at_(v) {
    const auto incident = c.edges_at(v);
    edges_.assign(incident.begin(), incident.end());
    const std::size_t d = edges_.size();
    adjacent_.assign(d * d, 0);
    for (CubeIndex sq : c.star(v, 2)) {
      auto local = edges_of_cube_at(c, 2, sq, v);
      adjacent_[local[0] * d + local[1]] = 1;
      adjacent_[local[1] * d + local[0]] = 1;
    }
  }

  VertexId at() const { return at_; }
  std::size_t degree() const { return edges_.size(); }
  CubeIndex edge(std::size_t local) const { return edges_[local]; }
  const std::vector<CubeIndex>& edges() const { return edges_; }

  std::optional<std::size_t> local_index(CubeIndex edge) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
    if (it == edges_.end() || *it != edge) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool adjacent(std::size_t a, std::size_t b) const { return adjacent_[a * edges_.size() + b] != 0; }

  bool have_common_neighbour(std::size_t a, std::size_t b) const {
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (adjacent(a, k) && adjacent(b, k)) return true;
    }
    return false;
  }

 private:
  VertexId at_ = 0;
  std::vector<CubeIndex> edges_;
  std::vector<char> adjacent_;
};

}  // namespace fcc

#endif  // FCC_LINK_HPP
