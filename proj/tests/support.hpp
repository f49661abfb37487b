#ifndef FCC_TESTS_SUPPORT_HPP
#define FCC_TESTS_SUPPORT_HPP

// Independent reference computations and shared fixtures for the tests.
// The oracles here work from raw corner lists and brute force; they do not
// call the library routine they are used to check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fcc/fcc.hpp"

namespace oracle {

using fcc::CubeIndex;
using fcc::CubicalComplex;
using fcc::VertexId;

/// Link graph at v straight from square corner lists: nodes are the edges at
/// v (in edges_at order), joined when some square holds both.
struct LinkGraph {
  std::vector<CubeIndex> edges;
  std::vector<std::vector<int>> adj;
};

inline LinkGraph link_graph(const CubicalComplex& c, VertexId v) {
  LinkGraph g;
  std::map<VertexId, int> by_neighbour;
  for (CubeIndex e : c.edges_at(v)) {
    const auto cs = c.corners(1, e);
    by_neighbour[cs[0] == v ? cs[1] : cs[0]] = static_cast<int>(g.edges.size());
    g.edges.push_back(e);
  }
  g.adj.assign(g.edges.size(), {});
  for (CubeIndex q = 0; q < c.count(2); ++q) {
    const auto cs = c.corners(2, q);
    if (std::find(cs.begin(), cs.end(), v) == cs.end()) continue;
    std::vector<int> at;
    for (VertexId w : cs) {
      auto it = by_neighbour.find(w);
      if (it != by_neighbour.end()) at.push_back(it->second);
    }
    // in a square the two corners adjacent to v are exactly its neighbours
    if (at.size() == 2) {
      g.adj[at[0]].push_back(at[1]);
      g.adj[at[1]].push_back(at[0]);
    }
  }
  return g;
}

/// Hop distances in the link graph from node a (max() when unreachable).
inline std::vector<std::size_t> hops_from(const LinkGraph& g, int a) {
  std::vector<std::size_t> d(g.edges.size(), std::numeric_limits<std::size_t>::max());
  std::deque<int> q{a};
  d[a] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : g.adj[x]) {
      if (d[y] == std::numeric_limits<std::size_t>::max()) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

/// Exact metric on a 1-dimensional all-right link: pi/2 per hop.
inline double exact_link_distance(std::size_t hops) {
  if (hops == std::numeric_limits<std::size_t>::max()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(hops) * 1.5707963267948966;
}

inline fcc::DistanceClass class_of_distance(double d) {
  const double pi = 3.141592653589793;
  if (d < 1e-9) return fcc::DistanceClass::Zero;
  if (std::abs(d - pi / 2) < 1e-9) return fcc::DistanceClass::Quarter;
  if (std::abs(d - pi) < 1e-9) return fcc::DistanceClass::Pi;
  return fcc::DistanceClass::MoreThanPi;
}

/// Number of parallel classes by a plain union-find over square corner lists.
inline std::size_t parallel_class_count(const CubicalComplex& c) {
  std::vector<std::size_t> parent(c.count(1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto edge = [&](VertexId a, VertexId b) { return *c.edge_between(a, b); };
  for (CubeIndex q = 0; q < c.count(2); ++q) {
    const auto s = c.corners(2, q);  // binary order: 0-1, 2-3 parallel; 0-2, 1-3 parallel
    parent[find(edge(s[0], s[1]))] = find(edge(s[2], s[3]));
    parent[find(edge(s[0], s[2]))] = find(edge(s[1], s[3]));
  }
  std::set<std::size_t> roots;
  for (std::size_t e = 0; e < parent.size(); ++e) roots.insert(find(e));
  return roots.size();
}

/// Flag test by brute force over all vertex subsets (small complexes only).
inline bool is_flag_brute(const fcc::SimplicialComplex& k) {
  const std::size_t n = k.vertex_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    fcc::Simplex s;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) s.push_back(v);
    }
    bool clique = true;
    for (std::size_t a = 0; a < s.size() && clique; ++a) {
      for (std::size_t b = a + 1; b < s.size() && clique; ++b) clique = k.adjacent(s[a], s[b]);
    }
    if (clique && !k.contains(s)) return false;
  }
  return true;
}

/// Face counts of Y(K): #k-faces = sum over (k-1)-simplices T of 2^{|S|-k}.
inline std::vector<std::size_t> davis_face_counts(const fcc::SimplicialComplex& k) {
  const std::size_t s = k.vertex_count();
  std::vector<std::size_t> out{std::size_t{1} << s};
  for (int d = 0; d <= k.dimension(); ++d) out.push_back(k.count(d) << (s - d - 1));
  return out;
}

/// Cube counts after halving every coordinate. Cells interior to a j-cube
/// take, per coordinate, the centre point or one of two half intervals, so
/// there are C(j,k) 2^k interior k-cells.
inline std::vector<std::size_t> half_subdivision_counts(const std::vector<std::size_t>& y_counts) {
  const std::size_t top = y_counts.size() - 1;
  std::vector<std::size_t> out(top + 1, 0);
  for (std::size_t j = 0; j <= top; ++j) {
    for (std::size_t k = 0; k <= j; ++k) {
      std::size_t choose = 1;
      for (std::size_t t = 0; t < k; ++t) choose = choose * (j - t) / (t + 1);
      out[k] += y_counts[j] * choose * (std::size_t{1} << k);
    }
  }
  return out;
}

/// Pairs of edges meeting at a corner of some square, as (min, max) edge ids.
/// Two edges share at most one endpoint, so the pair also fixes the corner.
inline std::set<std::pair<CubeIndex, CubeIndex>> square_corner_pairs(const CubicalComplex& c) {
  std::set<std::pair<CubeIndex, CubeIndex>> out;
  auto edge = [&](VertexId a, VertexId b) { return *c.edge_between(a, b); };
  for (CubeIndex q = 0; q < c.count(2); ++q) {
    const auto s = c.corners(2, q);
    const CubeIndex e01 = edge(s[0], s[1]), e23 = edge(s[2], s[3]), e02 = edge(s[0], s[2]), e13 = edge(s[1], s[3]);
    for (auto [a, b] : {std::pair{e01, e02}, {e01, e13}, {e23, e02}, {e23, e13}}) out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

/// Every cross pair (T-color edge, S-color edge) at every vertex lies in a
/// common square, checked from corner lists.
inline bool split_holds(const CubicalComplex& c, const fcc::EdgeColoring& col, std::uint32_t t_mask) {
  const auto pairs = square_corner_pairs(c);
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    const auto at = c.edges_at(v);
    for (CubeIndex a : at) {
      if (!(t_mask >> (col.color_of[a] - 1) & 1u)) continue;
      for (CubeIndex b : at) {
        if (t_mask >> (col.color_of[b] - 1) & 1u) continue;
        if (!pairs.count({std::min(a, b), std::max(a, b)})) return false;
      }
    }
  }
  return true;
}

/// Walk check for a cyclic vertex list: consecutive vertices (and the last
/// and first) are joined by edges; returns the number of edges of `color`
/// crossed, or -1.
inline int crossings(const CubicalComplex& c, const fcc::EdgeColoring* col, const std::vector<VertexId>& cyc,
                     int color) {
  int count = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    auto e = c.edge_between(cyc[i], cyc[(i + 1) % cyc.size()]);
    if (!e) return -1;
    if (col && col->color_of[*e] == color) ++count;
  }
  return count;
}

}  // namespace oracle

namespace corpus {

inline fcc::SimplicialComplex double_arc() { return fcc::hemispherex({1, {1, 1}, true}).complex; }
inline fcc::SimplicialComplex octahedral_hemispherex() { return fcc::hemispherex({2, {1, 1, 1}, false}).complex; }

inline fcc::CubicalComplex davis_X(const fcc::SimplicialComplex& k) { return fcc::subdivide_half(fcc::davis_Y(k)); }

inline fcc::SimplicialComplex cycle_graph(std::uint32_t n) {
  std::vector<fcc::Simplex> edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return fcc::SimplicialComplex::from_simplices(n, edges);
}

/// Suspension of a graph: two new apexes joined to everything.
inline fcc::SimplicialComplex suspension(const fcc::SimplicialComplex& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<fcc::Simplex> top;
  for (const auto& e : g.simplices(1)) {
    top.push_back({e[0], e[1], n});
    top.push_back({e[0], e[1], n + 1});
  }
  return fcc::SimplicialComplex::from_simplices(n + 2, top);
}

struct Entry {
  std::string name;
  fcc::CubicalComplex complex;
};

/// Dimension-2 FCCs used as factors and for the link-metric oracle.
inline std::vector<Entry> dimension2() {
  std::vector<Entry> out;
  out.push_back({"torus(4,4)", fcc::torus_grid({4, 4})});
  out.push_back({"torus(4,6)", fcc::torus_grid({4, 6})});
  out.push_back({"X(double-arc)", davis_X(double_arc())});
  out.push_back({"X(hemispherex n=1 m=1,2)", davis_X(fcc::hemispherex({1, {1, 2}, true}).complex)});
  out.push_back({"X(hemispherex n=1 m=2,2)", davis_X(fcc::hemispherex({1, {2, 2}, true}).complex)});
  out.push_back({"X(4-cycle)", davis_X(cycle_graph(4))});
  out.push_back({"X(hexagon)", davis_X(cycle_graph(6))});
  return out;
}

/// Dimension-3 FCCs: tori, products of dimension-2 FCCs with cycles, and
/// X(H) for hemispherexes with multiplicities up to 2.
inline std::vector<Entry> dimension3() {
  std::vector<Entry> out;
  for (std::vector<std::size_t> d : {std::vector<std::size_t>{4, 4, 4}, {4, 4, 6}, {4, 6, 6}, {6, 6, 6}, {4, 4, 8}}) {
    std::string name = "torus(";
    for (std::size_t i = 0; i < d.size(); ++i) name += (i ? "," : "") + std::to_string(d[i]);
    out.push_back({name + ")", fcc::torus_grid(d)});
  }
  const auto da = davis_X(double_arc());
  out.push_back({"X(double-arc) x C4", fcc::product(da, fcc::cycle(4))});
  out.push_back({"X(double-arc) x C6", fcc::product(da, fcc::cycle(6))});
  out.push_back({"C4 x X(double-arc)", fcc::product(fcc::cycle(4), da)});
  out.push_back({"X(hemispherex n=1 m=1,2) x C4",
                 fcc::product(davis_X(fcc::hemispherex({1, {1, 2}, true}).complex), fcc::cycle(4))});
  out.push_back({"X(hexagon) x C4", fcc::product(davis_X(cycle_graph(6)), fcc::cycle(4))});
  out.push_back({"X(4-cycle) x C6", fcc::product(davis_X(cycle_graph(4)), fcc::cycle(6))});
  out.push_back({"X(octahedron)", davis_X(fcc::standard_sphere(2))});
  out.push_back({"X(suspended hexagon)", davis_X(suspension(cycle_graph(6)))});
  for (std::vector<int> m : {std::vector<int>{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}, {2, 1, 2}, {1, 2, 2},
                             {2, 2, 2}}) {
    std::string name = "X(hemispherex m=";
    for (std::size_t i = 0; i < m.size(); ++i) name += (i ? "," : "") + std::to_string(m[i]);
    out.push_back({name + ")", davis_X(fcc::hemispherex({2, m, false}).complex)});
  }
  return out;
}

}  // namespace corpus

#endif  // FCC_TESTS_SUPPORT_HPP
