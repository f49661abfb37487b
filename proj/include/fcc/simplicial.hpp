#ifndef FCC_SIMPLICIAL_HPP
#define FCC_SIMPLICIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fcc/error.hpp"

namespace fcc {

using Simplex = std::vector<std::uint32_t>;  // sorted vertex ids

/// Finite abstract simplicial complex, closed under faces. Simplices of each
/// dimension are kept sorted.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the given simplices. Vertices 0..vertex_count-1 are always
  /// 0-simplices.
  static SimplicialComplex from_simplices(std::size_t vertex_count, const std::vector<Simplex>& simplices) {
    SimplicialComplex out;
    out.vertex_count_ = vertex_count;
    std::vector<std::set<Simplex>> by_dim(1);
    for (std::uint32_t v = 0; v < vertex_count; ++v) by_dim[0].insert({v});
    for (Simplex s : simplices) {
      std::sort(s.begin(), s.end());
      if (s.empty()) continue;
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw Error(ErrorKind::ParseError, "simplex has a repeated vertex");
      }
      if (s.back() >= vertex_count) {
        throw Error(ErrorKind::ParseError, "simplex vertex " + std::to_string(s.back()) + " out of range");
      }
      if (s.size() > 24) throw Error(ErrorKind::TooLarge, "simplex dimension too large");
      const std::size_t n = s.size();
      if (by_dim.size() < n) by_dim.resize(n);
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) face.push_back(s[i]);
        }
        by_dim[face.size() - 1].insert(std::move(face));
      }
    }
    while (by_dim.size() > 1 && by_dim.back().empty()) by_dim.pop_back();
    for (auto& level : by_dim) out.simplices_.emplace_back(level.begin(), level.end());
    if (vertex_count == 0) out.simplices_.clear();
    return out;
  }

  std::size_t vertex_count() const { return vertex_count_; }

  /// Top dimension; -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }

  const std::vector<Simplex>& simplices(std::size_t k) const {
    static const std::vector<Simplex> none;
    return k < simplices_.size() ? simplices_[k] : none;
  }

  std::size_t count(std::size_t k) const { return simplices(k).size(); }

  bool contains(const Simplex& s) const {
    if (s.empty()) return true;
    Simplex key = s;
    std::sort(key.begin(), key.end());
    const auto& level = simplices(key.size() - 1);
    return std::binary_search(level.begin(), level.end(), key);
  }

  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    return a != b && contains({std::min(a, b), std::max(a, b)});
  }

  /// Adjacency lists of the 1-skeleton.
  std::vector<std::vector<std::uint32_t>> neighbours() const {
    std::vector<std::vector<std::uint32_t>> adj(vertex_count_);
    for (const auto& e : simplices(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
  }

  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (std::size_t k = 0; k < simplices_.size(); ++k) {
      for (const auto& s : simplices_[k]) {
        bool maximal = true;
        if (k + 1 < simplices_.size()) {
          for (std::uint32_t v = 0; v < vertex_count_ && maximal; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex bigger = s;
            bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
            if (std::binary_search(simplices_[k + 1].begin(), simplices_[k + 1].end(), bigger)) maximal = false;
          }
        }
        if (maximal) out.push_back(s);
      }
    }
    return out;
  }

  /// Every simplex is a face of a top-dimensional simplex.
  bool is_homogeneous() const {
    if (dimension() < 0) return false;
    const std::size_t top = simplices_.size() - 1;
    std::set<Simplex> covered;
    for (const auto& s : simplices_[top]) {
      for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (mask & (1u << i)) face.push_back(s[i]);
        }
        covered.insert(std::move(face));
      }
    }
    for (const auto& level : simplices_) {
      for (const auto& s : level) {
        if (!covered.count(s)) return false;
      }
    }
    return true;
  }

  /// Every codimension-one simplex lies in at least two top simplices.
  bool has_no_boundary() const {
    if (dimension() < 1) return false;
    const std::size_t top = simplices_.size() - 1;
    for (const auto& s : simplices_[top - 1]) {
      std::size_t cofaces = 0;
      for (const auto& t : simplices_[top]) {
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) ++cofaces;
      }
      if (cofaces < 2) return false;
    }
    return true;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
};

struct FlagCheck {
  bool flag = true;
  Simplex witness;  ///< minimal clique of the 1-skeleton that spans no simplex
};

/// A complex is flag iff every clique spans a simplex. Extending simplices one
/// vertex at a time in increasing dimension finds a minimal missing clique.
inline FlagCheck is_flag(const SimplicialComplex& k) {
  const auto adj = k.neighbours();
  for (std::size_t d = 0; d < static_cast<std::size_t>(k.dimension() + 1); ++d) {
    for (const auto& s : k.simplices(d)) {
      for (std::uint32_t w : adj[s[0]]) {
        if (std::binary_search(s.begin(), s.end(), w)) continue;
        bool all = std::all_of(s.begin(), s.end(), [&](std::uint32_t x) {
          return std::binary_search(adj[x].begin(), adj[x].end(), w);
        });
        if (!all) continue;
        Simplex bigger = s;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), w), w);
        if (!k.contains(bigger)) return {false, bigger};
      }
    }
  }
  return {};
}

/// Exact isomorphism search (backtracking over vertex bijections, small sizes).
/// Returns the map a-vertex -> b-vertex on success.
inline std::optional<std::vector<std::uint32_t>> find_isomorphism(const SimplicialComplex& a,
                                                                  const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension()) return std::nullopt;
  for (int d = 0; d <= a.dimension(); ++d) {
    if (a.count(static_cast<std::size_t>(d)) != b.count(static_cast<std::size_t>(d))) return std::nullopt;
  }
  const std::size_t n = a.vertex_count();
  const auto adj_a = a.neighbours();
  const auto adj_b = b.neighbours();
  std::vector<std::uint32_t> map(n, static_cast<std::uint32_t>(-1));
  std::vector<char> used(n, 0);
  // order a's vertices by BFS so that constraints bite early
  std::vector<std::uint32_t> order;
  std::vector<char> queued(n, 0);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (queued[s]) continue;
    queued[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (std::uint32_t w : adj_a[order[i]]) {
        if (!queued[w]) {
          queued[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  auto check_simplices = [&]() {
    for (int d = 0; d <= a.dimension(); ++d) {
      for (const auto& s : a.simplices(static_cast<std::size_t>(d))) {
        Simplex img;
        for (auto v : s) img.push_back(map[v]);
        if (!b.contains(img)) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return check_simplices();
    const std::uint32_t v = order[pos];
    for (std::uint32_t w = 0; w < n; ++w) {
      if (used[w] || adj_a[v].size() != adj_b[w].size()) continue;
      bool ok = true;
      for (std::size_t p = 0; p < pos && ok; ++p) {
        const std::uint32_t u = order[p];
        const bool ea = std::binary_search(adj_a[v].begin(), adj_a[v].end(), u);
        const bool eb = std::binary_search(adj_b[w].begin(), adj_b[w].end(), map[u]);
        ok = ea == eb;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, pos + 1)) return true;
      used[w] = 0;
      map[v] = static_cast<std::uint32_t>(-1);
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

}  // namespace fcc

#endif  // FCC_SIMPLICIAL_HPP
