#ifndef FCC_FOLDING_HPP
#define FCC_FOLDING_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/link.hpp"
#include "fcc/simplicial.hpp"
#include "fcc/union_find.hpp"

namespace fcc {

/// Finest partition of the edges closed under "opposite in a square".
struct ParallelClasses {
  std::vector<std::size_t> class_of;  ///< per edge
  std::size_t class_count = 0;

  /// Edges of each class, ascending.
  std::vector<std::vector<CubeIndex>> members() const {
    std::vector<std::vector<CubeIndex>> out(class_count);
    for (CubeIndex e = 0; e < class_of.size(); ++e) out[class_of[e]].push_back(e);
    return out;
  }
};

/// Edge colours 1..colors; adjacent edges of a square differ, opposite agree.
struct EdgeColoring {
  std::size_t colors = 0;
  std::vector<int> color_of;  ///< per edge

  std::size_t count(int color) const {
    return static_cast<std::size_t>(std::count(color_of.begin(), color_of.end(), color));
  }
};

/// A folding onto the n-cube: every parallel class has a direction, and each
/// vertex maps to a corner of {0,1}^n (bit i-1 is coordinate i). Crossing an
/// edge flips exactly the coordinate of its direction.
struct Folding {
  std::size_t dimension = 0;
  ParallelClasses classes;
  std::vector<int> direction_of;             ///< per class, in 1..dimension
  std::vector<std::uint32_t> vertex_corner;  ///< per vertex

  int direction_of_edge(CubeIndex e) const { return direction_of[classes.class_of[e]]; }

  /// Coordinate `direction` of the image of v.
  int parity(int direction, VertexId v) const { return (vertex_corner[v] >> (direction - 1)) & 1u; }
};

/// Why no folding exists.
struct NotFoldable {
  enum class Reason { ParityCycle, DirectionConflict };
  Reason reason = Reason::DirectionConflict;
  /// ParityCycle: a closed vertex walk (last vertex adjacent to the first,
  /// which is not repeated) crossing edges of `color` an odd number of times
  /// under the first admissible direction assignment.
  std::vector<VertexId> cycle;
  int color = 0;
  /// DirectionConflict: classes that cannot receive distinct directions.
  std::vector<std::size_t> classes;
  std::string message;
};

using FoldingResult = std::variant<Folding, NotFoldable>;

inline ParallelClasses parallel_classes(const CubicalComplex& c) {
  DisjointSets sets(c.count(1));
  for (CubeIndex sq = 0; sq < c.count(2); ++sq) {
    auto f = c.facets(2, sq);
    // facets 0,1 are the two edges along axis 1; facets 2,3 along axis 0
    sets.unite(f[0], f[1]);
    sets.unite(f[2], f[3]);
  }
  ParallelClasses out;
  out.class_of.assign(c.count(1), 0);
  std::vector<std::size_t> id_of_root(c.count(1), std::numeric_limits<std::size_t>::max());
  for (CubeIndex e = 0; e < c.count(1); ++e) {
    std::size_t r = sets.find(e);
    if (id_of_root[r] == std::numeric_limits<std::size_t>::max()) id_of_root[r] = out.class_count++;
    out.class_of[e] = id_of_root[r];
  }
  return out;
}

inline bool is_dimensionally_homogeneous(const CubicalComplex& c) {
  const std::size_t n = c.dimension();
  if (c.vertex_count() == 0) return false;
  // a cube lies in an n-cube iff one of its cofaces does
  std::vector<char> covered(c.count(n), 1);
  for (std::size_t k = n; k-- > 0;) {
    std::vector<char> below(c.count(k), 0);
    for (CubeIndex i = 0; i < c.count(k); ++i) {
      for (CubeIndex up : c.cofaces(k, i)) {
        if (covered[up]) {
          below[i] = 1;
          break;
        }
      }
      if (!below[i]) return false;
    }
    covered = std::move(below);
  }
  return true;
}

inline EdgeColoring coloring_from(const Folding& f) {
  EdgeColoring out;
  out.colors = f.dimension;
  out.color_of.resize(f.classes.class_of.size());
  for (CubeIndex e = 0; e < out.color_of.size(); ++e) out.color_of[e] = f.direction_of_edge(e);
  return out;
}

/// Renames directions: direction d becomes perm[d-1]. Corner bits move along.
inline Folding permute_directions(const Folding& f, const std::vector<int>& perm) {
  if (perm.size() != f.dimension) throw Error(ErrorKind::PreconditionFailed, "permutation has wrong length");
  std::vector<int> seen(f.dimension + 1, 0);
  for (int d : perm) {
    if (d < 1 || static_cast<std::size_t>(d) > f.dimension || seen[d]++) {
      throw Error(ErrorKind::PreconditionFailed, "not a permutation of the directions");
    }
  }
  Folding out = f;
  for (auto& d : out.direction_of) d = perm[d - 1];
  for (std::size_t v = 0; v < f.vertex_corner.size(); ++v) {
    std::uint32_t bits = 0;
    for (std::size_t d = 1; d <= f.dimension; ++d) {
      if ((f.vertex_corner[v] >> (d - 1)) & 1u) bits |= std::uint32_t{1} << (perm[d - 1] - 1);
    }
    out.vertex_corner[v] = bits;
  }
  return out;
}

/// Checks that `f` realizes a folding of `c`: every edge flips exactly the
/// coordinate of its direction and every cube maps injectively. Returns an
/// empty string on success, otherwise the reason.
inline std::string verify_folding(const CubicalComplex& c, const Folding& f) {
  if (f.vertex_corner.size() != c.vertex_count() || f.classes.class_of.size() != c.count(1)) {
    return "folding does not match the complex";
  }
  for (CubeIndex e = 0; e < c.count(1); ++e) {
    auto cs = c.corners(1, e);
    const int dir = f.direction_of_edge(e);
    if (dir < 1 || static_cast<std::size_t>(dir) > f.dimension) return "edge " + std::to_string(e) + " has no direction";
    if ((f.vertex_corner[cs[0]] ^ f.vertex_corner[cs[1]]) != (1u << (dir - 1))) {
      return "edge " + std::to_string(e) + " does not flip exactly its direction";
    }
  }
  for (std::size_t k = 2; k <= c.dimension(); ++k) {
    std::vector<std::uint32_t> image;
    for (CubeIndex q = 0; q < c.count(k); ++q) {
      image.clear();
      for (VertexId v : c.corners(k, q)) image.push_back(f.vertex_corner[v]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        return std::to_string(k) + "-cube " + std::to_string(q) + " is not mapped injectively";
      }
    }
  }
  return {};
}

namespace detail {

/// Shortest closed walk crossing `color` edges an odd number of times
/// (a simple cycle, found by BFS over vertex-parity states from every root).
inline std::vector<VertexId> shortest_odd_cycle(const CubicalComplex& c, const std::vector<int>& color_of_edge,
                                                int color) {
  const std::size_t n = c.vertex_count();
  std::vector<VertexId> best;
  std::vector<std::size_t> dist(2 * n);
  std::vector<std::size_t> prev(2 * n);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    std::deque<std::size_t> queue{2 * root};
    dist[2 * root] = 0;
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      if (!best.empty() && dist[s] + 1 >= best.size()) break;
      const VertexId v = static_cast<VertexId>(s / 2);
      for (CubeIndex e : c.edges_at(v)) {
        const VertexId w = c.edge_other(e, v);
        const std::size_t t = 2 * w + ((s & 1u) ^ (color_of_edge[e] == color ? 1u : 0u));
        if (dist[t] != std::numeric_limits<std::size_t>::max()) continue;
        dist[t] = dist[s] + 1;
        prev[t] = s;
        queue.push_back(t);
      }
    }
    const std::size_t goal = 2 * root + 1;
    if (dist[goal] == std::numeric_limits<std::size_t>::max()) continue;
    if (best.empty() || dist[goal] < best.size()) {
      std::vector<VertexId> walk;
      for (std::size_t s = goal; s != 2 * root; s = prev[s]) walk.push_back(static_cast<VertexId>(s / 2));
      walk.push_back(root);
      std::reverse(walk.begin(), walk.end());
      walk.pop_back();  // closed: the last vertex equals the first
      best = std::move(walk);
    }
  }
  return best;
}

/// Backtracking search for a folding onto the `n`-cube. Variables are parallel
/// classes; constraints are (a) classes sharing a square get distinct
/// directions and (b) vertex potentials in (Z/2)^n stay consistent, tracked
/// with a rollback union-find. Forced directions are propagated eagerly.
class FoldingSearch {
 public:
  FoldingSearch(const CubicalComplex& c, std::size_t n)
      : c_(c), n_(n), classes_(parallel_classes(c)), members_(classes_.members()), potentials_(c.vertex_count()) {
    conflicts_.resize(classes_.class_count);
    for (CubeIndex sq = 0; sq < c.count(2); ++sq) {
      auto f = c.facets(2, sq);
      const std::size_t a = classes_.class_of[f[0]];
      const std::size_t b = classes_.class_of[f[2]];
      if (a == b) self_conflict_ = a;
      conflicts_[a].push_back(b);
      conflicts_[b].push_back(a);
    }
    for (auto& list : conflicts_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    assigned_.assign(classes_.class_count, 0);
  }

  FoldingResult run() {
    if (n_ == 0 || n_ > 32) {
      NotFoldable nf;
      nf.message = "target dimension " + std::to_string(n_) + " unsupported";
      return nf;
    }
    if (self_conflict_) {
      NotFoldable nf;
      nf.reason = NotFoldable::Reason::DirectionConflict;
      nf.classes = {*self_conflict_};
      nf.message = "class " + std::to_string(*self_conflict_) + " runs along two axes of one square";
      return nf;
    }
    if (search()) return assemble();
    return explain();
  }

 private:
  using Mask = std::uint32_t;

  Mask all_colors() const { return n_ == 32 ? ~Mask{0} : ((Mask{1} << n_) - 1); }

  /// Allowed directions (bit i-1 = direction i) for an unassigned class.
  Mask domain(std::size_t cls) const {
    Mask allowed = all_colors();
    for (std::size_t other : conflicts_[cls]) {
      if (assigned_[other]) allowed &= ~(Mask{1} << (assigned_[other] - 1));
    }
    for (CubeIndex e : members_[cls]) {
      if (allowed == 0) break;
      auto cs = c_.corners(1, e);
      auto [ra, pa] = potentials_.find(cs[0]);
      auto [rb, pb] = potentials_.find(cs[1]);
      if (ra != rb) continue;
      const Mask diff = pa ^ pb;
      allowed &= std::has_single_bit(diff) ? diff : 0;
    }
    return allowed;
  }

  bool assign(std::size_t cls, int dir) {
    assigned_[cls] = dir;
    order_.push_back(cls);
    const Mask bit = Mask{1} << (dir - 1);
    for (CubeIndex e : members_[cls]) {
      auto cs = c_.corners(1, e);
      if (!potentials_.relate(cs[0], cs[1], bit)) return false;
    }
    return true;
  }

  void undo(std::size_t order_mark, std::size_t trail_mark) {
    while (order_.size() > order_mark) {
      assigned_[order_.back()] = 0;
      order_.pop_back();
    }
    potentials_.rollback(trail_mark);
  }

  /// Assigns every class whose domain is a single direction. Returns false on
  /// an empty domain.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t cls = 0; cls < classes_.class_count; ++cls) {
        if (assigned_[cls]) continue;
        const Mask d = domain(cls);
        if (d == 0) return false;
        if (std::has_single_bit(d)) {
          if (!assign(cls, std::countr_zero(d) + 1)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    if (!propagate()) return false;
    // most constrained class first, lowest id on ties
    std::optional<std::size_t> pick;
    int best = std::numeric_limits<int>::max();
    Mask best_domain = 0;
    for (std::size_t cls = 0; cls < classes_.class_count; ++cls) {
      if (assigned_[cls]) continue;
      const Mask d = domain(cls);
      const int size = std::popcount(d);
      if (size < best) {
        best = size;
        pick = cls;
        best_domain = d;
      }
    }
    if (!pick) return true;
    // directions not used anywhere yet are interchangeable: try only the lowest
    Mask used = 0;
    for (std::size_t cls : order_) used |= Mask{1} << (assigned_[cls] - 1);
    bool tried_fresh = false;
    for (int dir = 1; dir <= static_cast<int>(n_); ++dir) {
      const Mask bit = Mask{1} << (dir - 1);
      if (!(best_domain & bit)) continue;
      if (!(used & bit)) {
        if (tried_fresh) continue;
        tried_fresh = true;
      }
      const std::size_t order_mark = order_.size();
      const std::size_t trail_mark = potentials_.checkpoint();
      if (assign(*pick, dir) && search()) return true;
      undo(order_mark, trail_mark);
    }
    return false;
  }

  Folding assemble() const {
    Folding f;
    f.dimension = n_;
    f.classes = classes_;
    f.direction_of = assigned_;
    f.vertex_corner.assign(c_.vertex_count(), 0);
    // base vertex of each component (its least vertex) sits at corner 0
    std::vector<std::size_t> seen_root(c_.vertex_count(), std::numeric_limits<std::size_t>::max());
    for (VertexId v = 0; v < c_.vertex_count(); ++v) {
      auto [root, pot] = potentials_.find(v);
      if (seen_root[root] == std::numeric_limits<std::size_t>::max()) seen_root[root] = pot;
      f.vertex_corner[v] = pot ^ static_cast<Mask>(seen_root[root]);
    }
    return f;
  }

  /// Failure witness: either the conflict graph alone admits no direction
  /// assignment, or the first admissible assignment has an odd parity cycle.
  NotFoldable explain() const {
    const std::size_t k = classes_.class_count;
    std::vector<int> dirs(k, 0);
    auto color_rec = [&](auto&& self, std::size_t cls) -> bool {
      if (cls == k) return true;
      for (int dir = 1; dir <= static_cast<int>(n_); ++dir) {
        bool ok = std::none_of(conflicts_[cls].begin(), conflicts_[cls].end(),
                               [&](std::size_t o) { return o < cls && dirs[o] == dir; });
        if (!ok) continue;
        dirs[cls] = dir;
        if (self(self, cls + 1)) return true;
      }
      dirs[cls] = 0;
      return false;
    };
    NotFoldable nf;
    if (!color_rec(color_rec, 0)) {
      nf.reason = NotFoldable::Reason::DirectionConflict;
      for (std::size_t cls = 0; cls < k; ++cls) nf.classes.push_back(cls);
      nf.message = "parallel classes admit no assignment of " + std::to_string(n_) + " directions";
      return nf;
    }
    std::vector<int> color_of_edge(c_.count(1));
    for (CubeIndex e = 0; e < c_.count(1); ++e) color_of_edge[e] = dirs[classes_.class_of[e]];
    nf.reason = NotFoldable::Reason::ParityCycle;
    for (int dir = 1; dir <= static_cast<int>(n_); ++dir) {
      auto cycle = shortest_odd_cycle(c_, color_of_edge, dir);
      if (cycle.empty()) continue;
      if (nf.cycle.empty() || cycle.size() < nf.cycle.size()) {
        nf.cycle = std::move(cycle);
        nf.color = dir;
      }
    }
    nf.message = "odd parity cycle of length " + std::to_string(nf.cycle.size()) + " in direction " +
                 std::to_string(nf.color);
    if (nf.cycle.empty()) nf.message = "no direction assignment is parity-consistent";
    return nf;
  }

  const CubicalComplex& c_;
  std::size_t n_;
  ParallelClasses classes_;
  std::vector<std::vector<CubeIndex>> members_;
  std::vector<std::vector<std::size_t>> conflicts_;
  std::optional<std::size_t> self_conflict_;
  std::vector<int> assigned_;
  std::vector<std::size_t> order_;
  PotentialSets potentials_;
};

}  // namespace detail

/// Folding onto the cube of the complex's own dimension, without requiring
/// homogeneity.
inline FoldingResult search_folding(const CubicalComplex& c, std::size_t n) {
  return detail::FoldingSearch(c, n).run();
}

inline FoldingResult find_folding(const CubicalComplex& c) {
  if (!is_dimensionally_homogeneous(c) || c.dimension() == 0) {
    throw Error(ErrorKind::NotHomogeneous, "complex is not dimensionally homogeneous of positive dimension");
  }
  auto result = search_folding(c, c.dimension());
  if (auto* f = std::get_if<Folding>(&result)) {
    auto problem = verify_folding(c, *f);
    if (!problem.empty()) throw Error(ErrorKind::ConstructionFailed, "folding postcondition: " + problem);
  }
  return result;
}

/// Proper colouring of the 1-skeleton of K with dim(K)+1 colours (colours
/// 1..dim+1 per vertex), or nullopt when K is not foldable.
inline std::optional<std::vector<int>> fold_simplicial(const SimplicialComplex& k) {
  if (k.dimension() < 0 || !k.is_homogeneous()) {
    throw Error(ErrorKind::NotHomogeneous, "simplicial complex is not dimensionally homogeneous");
  }
  const int colors = k.dimension() + 1;
  const std::size_t n = k.vertex_count();
  const auto adj = k.neighbours();
  std::vector<int> color(n, 0);
  // first-fail: always extend the uncoloured vertex with the fewest options
  auto options = [&](std::uint32_t v) {
    std::uint32_t banned = 0;
    for (auto w : adj[v]) {
      if (color[w]) banned |= 1u << (color[w] - 1);
    }
    return banned;
  };
  auto rec = [&](auto&& self, std::size_t placed) -> bool {
    if (placed == n) return true;
    std::optional<std::uint32_t> pick;
    int fewest = colors + 1;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (color[v]) continue;
      const int free = colors - std::popcount(options(v) & ((1u << colors) - 1));
      if (free < fewest) {
        fewest = free;
        pick = v;
      }
    }
    const std::uint32_t banned = options(*pick);
    for (int c = 1; c <= colors; ++c) {
      if (banned & (1u << (c - 1))) continue;
      color[*pick] = c;
      if (self(self, placed + 1)) return true;
    }
    color[*pick] = 0;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return color;
}

}  // namespace fcc

#endif  // FCC_FOLDING_HPP
