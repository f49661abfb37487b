#ifndef FCC_UNION_FIND_HPP
#define FCC_UNION_FIND_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace fcc {

/// Disjoint sets with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  /// returns true if a union was performed
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Disjoint sets carrying an XOR potential in (Z/2)^32 relative to the root,
/// with an undo trail. No path compression, so `find` stays O(log n) and every
/// union can be rolled back.
class PotentialSets {
 public:
  using Mask = std::uint32_t;

  explicit PotentialSets(std::size_t n = 0) : parent_(n), rank_(n, 0), offset_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  /// Root of `i` and the potential of `i` relative to it.
  std::pair<std::size_t, Mask> find(std::size_t i) const {
    Mask acc = 0;
    while (parent_[i] != i) {
      acc ^= offset_[i];
      i = parent_[i];
    }
    return {i, acc};
  }

  /// Imposes potential(a) ^ potential(b) == diff. Returns false on contradiction
  /// (nothing is recorded in that case).
  bool relate(std::size_t a, std::size_t b, Mask diff) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == diff;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    // attach rb under ra so that pot(b) = pot(a) ^ diff
    parent_[rb] = ra;
    offset_[rb] = pa ^ pb ^ diff;
    bool bumped = rank_[ra] == rank_[rb];
    if (bumped) ++rank_[ra];
    trail_.push_back({rb, bumped});
    return true;
  }

  std::size_t checkpoint() const { return trail_.size(); }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [child, bumped] = trail_.back();
      trail_.pop_back();
      std::size_t root = parent_[child];
      if (bumped) --rank_[root];
      parent_[child] = child;
      offset_[child] = 0;
    }
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<Mask> offset_;
  std::vector<std::pair<std::size_t, bool>> trail_;
};

}  // namespace fcc

#endif  // FCC_UNION_FIND_HPP
