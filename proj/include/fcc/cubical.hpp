#ifndef FCC_CUBICAL_HPP
#define FCC_CUBICAL_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcc/error.hpp"
#include "fcc/union_find.hpp"

namespace fcc {

using VertexId = std::uint32_t;
using CubeIndex = std::size_t;

/// A combinatorial k-cube: corner b sits at the binary coordinates of b
/// (bit j = coordinate j).
struct Cube {
  std::size_t dim = 0;
  std::vector<VertexId> corners;
};

/// (dimension, index) handle of a cube inside a complex.
struct CubeRef {
  std::size_t dim = 0;
  CubeIndex index = 0;
  friend bool operator==(const CubeRef&, const CubeRef&) = default;
};

namespace detail {

/// Scatters the low bits of `bits` onto the set positions of `mask`.
inline std::size_t deposit(std::size_t bits, std::size_t mask) {
  std::size_t out = 0;
  for (std::size_t pos = 0; mask != 0; ++pos) {
    if (mask & 1u) {
      if (bits & 1u) out |= std::size_t{1} << pos;
      bits >>= 1;
    }
    mask >>= 1;
  }
  return out;
}

inline std::size_t cube_dim_of(std::size_t corner_count) {
  if (corner_count == 0 || !std::has_single_bit(corner_count)) {
    throw Error(ErrorKind::NotAComplex, "corner count " + std::to_string(corner_count) + " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(corner_count));
}

struct VertexSetHash {
  std::size_t operator()(const std::vector<VertexId>& key) const noexcept {
    std::size_t h = key.size() * 0x9e3779b97f4a7c15ull;
    for (VertexId v : key) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::vector<VertexId> sorted_copy(std::span<const VertexId> corners) {
  std::vector<VertexId> out(corners.begin(), corners.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Lexicographically least corner sequence over the 2^k k! symmetries of the
/// combinatorial cube: anchor at the least corner, axes ordered by the id of
/// the neighbouring corner.
inline std::vector<VertexId> canonical_corners(std::span<const VertexId> corners) {
  const std::size_t dim = detail::cube_dim_of(corners.size());
  const std::size_t anchor =
      static_cast<std::size_t>(std::min_element(corners.begin(), corners.end()) - corners.begin());
  std::vector<std::size_t> axes(dim);
  for (std::size_t j = 0; j < dim; ++j) axes[j] = j;
  std::sort(axes.begin(), axes.end(), [&](std::size_t a, std::size_t b) {
    return corners[anchor ^ (std::size_t{1} << a)] < corners[anchor ^ (std::size_t{1} << b)];
  });
  std::vector<VertexId> out(corners.size());
  for (std::size_t b = 0; b < corners.size(); ++b) {
    std::size_t original = anchor;
    for (std::size_t a = 0; a < dim; ++a) {
      if (b & (std::size_t{1} << a)) original ^= std::size_t{1} << axes[a];
    }
    out[b] = corners[original];
  }
  return out;
}

/// Finite cubical complex, immutable after construction. Vertices are
/// 0..vertex_count()-1 and are the 0-cubes. Every k-cube is stored in
/// canonical corner order, and cubes of each dimension are sorted
/// lexicographically by their corner sequence.
class CubicalComplex {
 public:
  struct BuildOptions {
    bool check_axioms = true;  ///< corner distinctness and the intersection axiom
    bool close_faces = true;   ///< add all faces of the given cubes
  };

  CubicalComplex() = default;

  /// Face closure of `cubes`; rejects inputs violating injectivity or the
  /// intersection axiom with ErrorKind::NotAComplex.
  static CubicalComplex from_cubes(std::size_t vertex_count, const std::vector<Cube>& cubes) {
    return build(vertex_count, cubes, BuildOptions{});
  }

  static CubicalComplex build(std::size_t vertex_count, const std::vector<Cube>& cubes, BuildOptions options);

  std::size_t vertex_count() const { return vertex_count_; }
  bool empty() const { return vertex_count_ == 0; }

  /// Largest k with a k-cube (0 for complexes without edges).
  std::size_t dimension() const { return corners_.empty() ? 0 : corners_.size() - 1; }

  std::size_t count(std::size_t k) const {
    if (k >= corners_.size()) return 0;
    return corners_[k].size() >> k;
  }

  std::span<const VertexId> corners(std::size_t k, CubeIndex i) const {
    const std::size_t stride = std::size_t{1} << k;
    return {corners_[k].data() + i * stride, stride};
  }
  std::span<const VertexId> corners(CubeRef ref) const { return corners(ref.dim, ref.index); }

  /// Codimension-one faces; entries 2j and 2j+1 are the faces with coordinate j
  /// equal to 0 and 1.
  std::span<const CubeIndex> facets(std::size_t k, CubeIndex i) const {
    if (k == 0) return {};
    return {facets_[k].data() + i * 2 * k, 2 * k};
  }

  std::span<const CubeIndex> cofaces(std::size_t k, CubeIndex i) const {
    if (k + 1 >= corners_.size()) return {};
    const auto& off = coface_offsets_[k];
    return {cofaces_[k].data() + off[i], off[i + 1] - off[i]};
  }

  /// k-cubes having v as a corner, ascending.
  std::span<const CubeIndex> star(VertexId v, std::size_t k) const {
    if (k >= corners_.size()) return {};
    if (k == 0) return {&vertex_self_[v], 1};
    const auto& off = star_offsets_[k];
    return {star_[k].data() + off[v], off[v + 1] - off[v]};
  }

  /// Edges at v, ascending by edge index.
  std::span<const CubeIndex> edges_at(VertexId v) const { return star(v, 1); }
  std::size_t degree(VertexId v) const { return edges_at(v).size(); }

  VertexId edge_other(CubeIndex edge, VertexId v) const {
    auto c = corners(1, edge);
    return c[0] == v ? c[1] : c[0];
  }

  std::optional<CubeIndex> edge_between(VertexId a, VertexId b) const {
    if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
    for (CubeIndex e : edges_at(a)) {
      if (edge_other(e, a) == b) return e;
    }
    return std::nullopt;
  }

  /// Cube with the given vertex set (any order).
  std::optional<CubeIndex> find(std::size_t k, std::span<const VertexId> vertices) const {
    if (vertices.size() != (std::size_t{1} << k) || k >= corners_.size()) return std::nullopt;
    auto key = detail::sorted_copy(vertices);
    if (key.back() >= vertex_count_) return std::nullopt;
    if (k == 0) return key[0];
    for (CubeIndex c : star(key[0], k)) {
      auto cs = corners(k, c);
      if (std::all_of(cs.begin(), cs.end(),
                      [&](VertexId v) { return std::binary_search(key.begin(), key.end(), v); })) {
        return c;
      }
    }
    return std::nullopt;
  }

  bool is_maximal(std::size_t k, CubeIndex i) const { return cofaces(k, i).empty(); }

  /// Maximal cubes ordered by dimension, then by index.
  std::vector<Cube> maximal_cubes() const {
    std::vector<Cube> out;
    for (std::size_t k = 0; k < corners_.size(); ++k) {
      for (CubeIndex i = 0; i < count(k); ++i) {
        if (!is_maximal(k, i)) continue;
        auto cs = corners(k, i);
        out.push_back({k, {cs.begin(), cs.end()}});
      }
    }
    return out;
  }

  /// All cubes of the complex, dimension by dimension.
  std::vector<Cube> all_cubes() const {
    std::vector<Cube> out;
    for (std::size_t k = 0; k < corners_.size(); ++k) {
      for (CubeIndex i = 0; i < count(k); ++i) {
        auto cs = corners(k, i);
        out.push_back({k, {cs.begin(), cs.end()}});
      }
    }
    return out;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < corners_.size(); ++k) {
      chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(count(k));
    }
    return chi;
  }

  /// Position of corner v inside cube (k, i), if present.
  std::optional<std::size_t> corner_position(std::size_t k, CubeIndex i, VertexId v) const {
    auto cs = corners(k, i);
    for (std::size_t p = 0; p < cs.size(); ++p) {
      if (cs[p] == v) return p;
    }
    return std::nullopt;
  }

  friend bool operator==(const CubicalComplex& a, const CubicalComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.corners_ == b.corners_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<VertexId>> corners_;
  std::vector<std::vector<CubeIndex>> facets_;
  std::vector<std::vector<std::size_t>> coface_offsets_;
  std::vector<std::vector<CubeIndex>> cofaces_;
  std::vector<std::vector<std::size_t>> star_offsets_;
  std::vector<std::vector<CubeIndex>> star_;
  std::vector<CubeIndex> vertex_self_;
};

namespace detail {

/// Corner sequence of the face of `cube` fixing the coordinates outside
/// `free_mask` to the bits of `base`.
inline std::vector<VertexId> face_corners(std::span<const VertexId> cube, std::size_t free_mask, std::size_t base) {
  const std::size_t k = static_cast<std::size_t>(std::popcount(free_mask));
  std::vector<VertexId> out(std::size_t{1} << k);
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = cube[base | deposit(b, free_mask)];
  return out;
}

/// Checks that `shared` (sorted, nonempty) is the vertex set of a face of the
/// canonical cube `cube`; returns that face's canonical corners.
inline std::optional<std::vector<VertexId>> face_with_vertices(std::span<const VertexId> cube,
                                                               const std::vector<VertexId>& shared) {
  std::size_t all_and = ~std::size_t{0};
  std::size_t all_or = 0;
  for (std::size_t p = 0; p < cube.size(); ++p) {
    if (std::binary_search(shared.begin(), shared.end(), cube[p])) {
      all_and &= p;
      all_or |= p;
    }
  }
  const std::size_t free_mask = all_and ^ all_or;
  if ((std::size_t{1} << std::popcount(free_mask)) != shared.size()) return std::nullopt;
  return canonical_corners(face_corners(cube, free_mask, all_and));
}

}  // namespace detail

inline CubicalComplex CubicalComplex::build(std::size_t vertex_count, const std::vector<Cube>& cubes,
                                            BuildOptions options) {
  using Key = std::vector<VertexId>;
  using KeyMap = std::unordered_map<Key, std::vector<VertexId>, detail::VertexSetHash>;

  // canonicalize and deduplicate the generating cubes
  std::vector<std::vector<VertexId>> generators;
  KeyMap seen;
  for (const Cube& cube : cubes) {
    if (cube.corners.size() != (std::size_t{1} << cube.dim)) {
      throw Error(ErrorKind::NotAComplex, "cube of dimension " + std::to_string(cube.dim) + " needs " +
                                              std::to_string(std::size_t{1} << cube.dim) + " corners");
    }
    for (VertexId v : cube.corners) {
      if (v >= vertex_count) {
        throw Error(ErrorKind::NotAComplex, "corner " + std::to_string(v) + " out of range");
      }
    }
    Key key = detail::sorted_copy(cube.corners);
    if (options.check_axioms && std::adjacent_find(key.begin(), key.end()) != key.end()) {
      throw Error(ErrorKind::NotAComplex, "cube has repeated corner " + std::to_string(*std::adjacent_find(key.begin(), key.end())));
    }
    auto canon = canonical_corners(cube.corners);
    auto [it, inserted] = seen.emplace(key, canon);
    if (inserted) {
      generators.push_back(std::move(canon));
    } else if (options.check_axioms && it->second != canon) {
      throw Error(ErrorKind::NotAComplex, "two distinct cubes share all corners");
    }
  }
  seen.clear();

  if (options.check_axioms) {
    // pairwise intersections of generators, each pair checked at its least shared vertex
    std::vector<std::vector<std::size_t>> at_vertex(vertex_count);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      for (VertexId v : generators[g]) at_vertex[v].push_back(g);
    }
    std::vector<Key> keys(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) keys[g] = detail::sorted_copy(generators[g]);
    Key shared;
    for (VertexId v = 0; v < vertex_count; ++v) {
      const auto& list = at_vertex[v];
      for (std::size_t x = 0; x < list.size(); ++x) {
        for (std::size_t y = x + 1; y < list.size(); ++y) {
          const Key& a = keys[list[x]];
          const Key& b = keys[list[y]];
          shared.clear();
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
          if (shared.front() != v) continue;
          auto fa = detail::face_with_vertices(generators[list[x]], shared);
          auto fb = detail::face_with_vertices(generators[list[y]], shared);
          if (!fa || !fb || *fa != *fb) {
            auto describe = [](const std::vector<VertexId>& cs) {
              std::string s = "[";
              for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " " : "") + std::to_string(cs[i]);
              return s + "]";
            };
            throw Error(ErrorKind::NotAComplex, "intersection of cubes " + describe(generators[list[x]]) + " and " +
                                                    describe(generators[list[y]]) + " is not a common face");
          }
        }
      }
    }
  }

  // face closure, bucketed by dimension
  std::size_t top = 0;
  for (const auto& g : generators) top = std::max(top, detail::cube_dim_of(g.size()));
  if (vertex_count == 0) top = 0;
  std::vector<KeyMap> by_dim(top + 1);
  auto add = [&](std::vector<VertexId> canon) {
    const std::size_t k = detail::cube_dim_of(canon.size());
    if (k == 0) return;
    Key key = detail::sorted_copy(canon);
    auto [it, inserted] = by_dim[k].emplace(std::move(key), canon);
    if (!inserted && options.check_axioms && it->second != canon) {
      throw Error(ErrorKind::NotAComplex, "faces with equal vertex sets differ");
    }
  };
  for (auto& g : generators) {
    const std::size_t k = detail::cube_dim_of(g.size());
    if (!options.close_faces) {
      add(g);
      continue;
    }
    const std::size_t full = (std::size_t{1} << k) - 1;
    for (std::size_t free_mask = 1; free_mask <= full; ++free_mask) {
      const std::size_t fixed = full ^ free_mask;
      // iterate over all assignments of the fixed coordinates
      std::size_t base = 0;
      while (true) {
        add(canonical_corners(detail::face_corners(g, free_mask, base)));
        if (base == fixed) break;
        base = (base - fixed) & fixed;
      }
    }
  }
  generators.clear();

  CubicalComplex out;
  out.vertex_count_ = vertex_count;
  while (top > 0 && by_dim[top].empty()) --top;
  out.corners_.resize(top + 1);
  out.corners_[0].resize(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) out.corners_[0][v] = v;

  std::vector<std::unordered_map<Key, CubeIndex, detail::VertexSetHash>> index_of(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::vector<VertexId>> list;
    list.reserve(by_dim[k].size());
    for (auto& [key, canon] : by_dim[k]) list.push_back(std::move(canon));
    std::sort(list.begin(), list.end());
    auto& flat = out.corners_[k];
    flat.reserve(list.size() << k);
    index_of[k].reserve(list.size());
    for (CubeIndex i = 0; i < list.size(); ++i) {
      flat.insert(flat.end(), list[i].begin(), list[i].end());
      index_of[k].emplace(detail::sorted_copy(list[i]), i);
    }
    by_dim[k].clear();
  }

  // facets
  out.facets_.resize(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    auto& fac = out.facets_[k];
    fac.resize(out.count(k) * 2 * k);
    const std::size_t full = (std::size_t{1} << k) - 1;
    for (CubeIndex i = 0; i < out.count(k); ++i) {
      auto cs = out.corners(k, i);
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t free_mask = full ^ (std::size_t{1} << j);
        for (std::size_t side = 0; side < 2; ++side) {
          auto face = detail::face_corners(cs, free_mask, side << j);
          CubeIndex idx;
          if (k == 1) {
            idx = face[0];
          } else {
            auto it = index_of[k - 1].find(detail::sorted_copy(face));
            if (it == index_of[k - 1].end()) {
              throw Error(ErrorKind::NotAComplex, "complex is not closed under faces");
            }
            idx = it->second;
          }
          fac[i * 2 * k + 2 * j + side] = idx;
        }
      }
    }
  }
  index_of.clear();

  // cofaces (CSR)
  out.coface_offsets_.resize(top + 1);
  out.cofaces_.resize(top + 1);
  for (std::size_t k = 0; k < top; ++k) {
    auto& off = out.coface_offsets_[k];
    off.assign(out.count(k) + 1, 0);
    for (CubeIndex c = 0; c < out.count(k + 1); ++c) {
      for (CubeIndex f : out.facets(k + 1, c)) ++off[f + 1];
    }
    for (std::size_t i = 0; i < out.count(k); ++i) off[i + 1] += off[i];
    auto& cof = out.cofaces_[k];
    cof.resize(off.back());
    std::vector<std::size_t> fill(off.begin(), off.end() - 1);
    for (CubeIndex c = 0; c < out.count(k + 1); ++c) {
      for (CubeIndex f : out.facets(k + 1, c)) cof[fill[f]++] = c;
    }
  }

  // stars (CSR)
  out.vertex_self_.assign(out.corners_[0].begin(), out.corners_[0].end());
  out.star_offsets_.resize(top + 1);
  out.star_.resize(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    auto& off = out.star_offsets_[k];
    off.assign(vertex_count + 1, 0);
    for (VertexId v : out.corners_[k]) ++off[v + 1];
    for (std::size_t v = 0; v < vertex_count; ++v) off[v + 1] += off[v];
    auto& st = out.star_[k];
    st.resize(off.back());
    std::vector<std::size_t> fill(off.begin(), off.end() - 1);
    for (CubeIndex c = 0; c < out.count(k); ++c) {
      for (VertexId v : out.corners(k, c)) st[fill[v]++] = c;
    }
  }
  return out;
}

/// A connected component (or any induced piece) of a complex with its maps
/// back to the parent.
struct Component {
  CubicalComplex complex;
  std::vector<VertexId> to_parent;                     ///< local vertex -> parent vertex
  std::vector<std::vector<CubeIndex>> cube_to_parent;  ///< per dimension, local cube -> parent cube
};

/// Subcomplex of `parent` spanned by the kept cubes (which must be closed under
/// faces) on the kept vertices, renumbered monotonically. Monotone relabeling
/// preserves canonical forms and cube order, so the cube maps are the filters.
inline Component induced_subcomplex(const CubicalComplex& parent, const std::vector<VertexId>& vertices,
                                    const std::vector<std::vector<char>>& keep) {
  Component out;
  out.to_parent = vertices;
  std::vector<VertexId> local(parent.vertex_count(), static_cast<VertexId>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Cube> cubes;
  out.cube_to_parent.assign(1, {});
  out.cube_to_parent[0].assign(vertices.begin(), vertices.end());
  for (std::size_t k = 1; k < keep.size() && k <= parent.dimension(); ++k) {
    std::vector<CubeIndex> kept;
    for (CubeIndex c = 0; c < parent.count(k); ++c) {
      if (!keep[k][c]) continue;
      kept.push_back(c);
      Cube cube{k, {}};
      for (VertexId v : parent.corners(k, c)) cube.corners.push_back(local[v]);
      cubes.push_back(std::move(cube));
    }
    out.cube_to_parent.push_back(std::move(kept));
  }
  out.complex = CubicalComplex::build(vertices.size(), cubes, {.check_axioms = false, .close_faces = false});
  out.cube_to_parent.resize(out.complex.dimension() + 1);
  return out;
}

/// Connected components by 1-skeleton connectivity, ordered by least vertex.
inline std::vector<Component> components(const CubicalComplex& c) {
  DisjointSets sets(c.vertex_count());
  for (CubeIndex e = 0; e < c.count(1); ++e) {
    auto cs = c.corners(1, e);
    sets.unite(cs[0], cs[1]);
  }
  std::vector<std::size_t> comp_of_root(c.vertex_count(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> comp_of(c.vertex_count());
  std::vector<std::vector<VertexId>> members;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    std::size_t r = sets.find(v);
    if (comp_of_root[r] == static_cast<std::size_t>(-1)) {
      comp_of_root[r] = members.size();
      members.emplace_back();
    }
    comp_of[v] = comp_of_root[r];
    members[comp_of[v]].push_back(v);
  }
  std::vector<Component> out;
  out.reserve(members.size());
  for (std::size_t m = 0; m < members.size(); ++m) {
    std::vector<std::vector<char>> keep(c.dimension() + 1);
    for (std::size_t k = 1; k <= c.dimension(); ++k) {
      keep[k].assign(c.count(k), 0);
      for (CubeIndex i = 0; i < c.count(k); ++i) keep[k][i] = comp_of[c.corners(k, i)[0]] == m;
    }
    out.push_back(induced_subcomplex(c, members[m], keep));
  }
  return out;
}

inline bool is_connected(const CubicalComplex& c) {
  if (c.vertex_count() == 0) return false;
  DisjointSets sets(c.vertex_count());
  std::size_t merges = 0;
  for (CubeIndex e = 0; e < c.count(1); ++e) {
    auto cs = c.corners(1, e);
    merges += sets.unite(cs[0], cs[1]);
  }
  return merges + 1 == c.vertex_count();
}

}  // namespace fcc

#endif  // FCC_CUBICAL_HPP
