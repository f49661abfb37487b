#ifndef FCC_GENERATORS_HPP
#define FCC_GENERATORS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/simplicial.hpp"

namespace fcc {

/// Boundary of the (n+1)-dimensional cross-polytope. Antipodal pair k is
/// {2k, 2k+1}; a simplex takes at most one vertex from each pair.
inline SimplicialComplex standard_sphere(int n) {
  if (n < 1) throw Error(ErrorKind::BadDimension, "sphere dimension must be at least 1");
  if (n > 20) throw Error(ErrorKind::TooLarge, "sphere dimension too large");
  const std::uint32_t pairs = static_cast<std::uint32_t>(n) + 1;
  std::vector<Simplex> top;
  for (std::uint32_t choice = 0; choice < (1u << pairs); ++choice) {
    Simplex s;
    for (std::uint32_t k = 0; k < pairs; ++k) s.push_back(2 * k + ((choice >> k) & 1u));
    top.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(2 * pairs, top);
}

/// Vertices of equator i (1-based): all sphere vertices outside pair i-1.
inline std::vector<std::uint32_t> equator_vertices(int n, int i) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k <= static_cast<std::uint32_t>(n); ++k) {
    if (static_cast<int>(k) + 1 == i) continue;
    out.push_back(2 * k);
    out.push_back(2 * k + 1);
  }
  return out;
}

struct HemispherexSpec {
  int n = 2;
  std::vector<int> multiplicities;  ///< m_1..m_{n+1}
  bool allow_dimension_one = false;
};

struct Pole {
  int equator = 0;        ///< 1..n+1
  int copy = 0;           ///< 1..m_equator
  std::uint32_t vertex = 0;
};

struct Hemispherex {
  SimplicialComplex complex;
  std::vector<Pole> poles;  ///< ordered by equator, then copy
};

/// Central standard n-sphere plus m_i hemispheres coned over equator i, all
/// attached by the identity on antipodal-pair labels. Poles follow the
/// 2(n+1) sphere vertices, ordered by equator and copy.
inline Hemispherex hemispherex(const HemispherexSpec& spec) {
  if (spec.n < 1 || (spec.n == 1 && !spec.allow_dimension_one)) {
    throw Error(ErrorKind::BadSpec, "hemispherex needs n >= 2 (n = 1 only with the extension flag)");
  }
  if (spec.multiplicities.size() != static_cast<std::size_t>(spec.n) + 1) {
    throw Error(ErrorKind::BadSpec, "hemispherex needs n+1 multiplicities");
  }
  for (int m : spec.multiplicities) {
    if (m < 1) throw Error(ErrorKind::BadSpec, "every multiplicity must be at least 1");
  }
  const std::uint32_t pairs = static_cast<std::uint32_t>(spec.n) + 1;
  std::vector<Simplex> top;
  for (std::uint32_t choice = 0; choice < (1u << pairs); ++choice) {
    Simplex s;
    for (std::uint32_t k = 0; k < pairs; ++k) s.push_back(2 * k + ((choice >> k) & 1u));
    top.push_back(std::move(s));
  }
  Hemispherex out;
  std::uint32_t next = 2 * pairs;
  for (int i = 1; i <= static_cast<int>(pairs); ++i) {
    for (int copy = 1; copy <= spec.multiplicities[i - 1]; ++copy) {
      const std::uint32_t pole = next++;
      out.poles.push_back({i, copy, pole});
      for (std::uint32_t choice = 0; choice < (1u << (pairs - 1)); ++choice) {
        Simplex s;
        std::uint32_t bit = 0;
        for (std::uint32_t k = 0; k < pairs; ++k) {
          if (static_cast<int>(k) + 1 == i) continue;
          s.push_back(2 * k + ((choice >> bit++) & 1u));
        }
        s.push_back(pole);
        top.push_back(std::move(s));
      }
    }
  }
  out.complex = SimplicialComplex::from_simplices(next, top);
  return out;
}

/// Y(K): the subcomplex of the |S|-cube made of the faces parallel to
/// simplices of K. Vertex ids are the coordinate bitstrings (bit s =
/// coordinate of vertex s of K).
inline CubicalComplex davis_Y(const SimplicialComplex& k, std::size_t max_vertices_log2 = 16) {
  const std::size_t s = k.vertex_count();
  if (s > max_vertices_log2 || s >= 32) {
    throw Error(ErrorKind::TooLarge, "K has " + std::to_string(s) + " vertices; the cap is " +
                                         std::to_string(max_vertices_log2));
  }
  if (s == 0) throw Error(ErrorKind::BadSpec, "K is empty");
  const std::uint32_t total = 1u << s;
  std::vector<Cube> cubes;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& simplex : k.simplices(static_cast<std::size_t>(d))) {
      std::uint32_t mask = 0;
      for (auto v : simplex) mask |= 1u << v;
      const std::size_t dim = simplex.size();
      for (std::uint32_t z = 0; z < total; ++z) {
        if (z & mask) continue;
        Cube cube{dim, std::vector<VertexId>(std::size_t{1} << dim)};
        for (std::size_t b = 0; b < cube.corners.size(); ++b) {
          cube.corners[b] = z | static_cast<VertexId>(detail::deposit(b, mask));
        }
        cubes.push_back(std::move(cube));
      }
    }
  }
  return CubicalComplex::build(total, cubes, {.check_axioms = false, .close_faces = false});
}

namespace detail {

/// (base corner, direction mask) of a cube of a Davis complex, checking that
/// the canonical corners enumerate a coordinate face.
inline std::pair<std::uint32_t, std::uint32_t> davis_face(const CubicalComplex& y, std::size_t k, CubeIndex q) {
  auto cs = y.corners(k, q);
  const std::uint32_t z = cs[0];
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j < k; ++j) mask |= cs[std::size_t{1} << j] ^ z;
  if (static_cast<std::size_t>(std::popcount(mask)) != k || (z & mask) != 0) {
    throw Error(ErrorKind::NotDavisOutput, "cube is not a coordinate face");
  }
  for (std::size_t b = 0; b < cs.size(); ++b) {
    if (cs[b] != (z | static_cast<std::uint32_t>(deposit(b, mask)))) {
      throw Error(ErrorKind::NotDavisOutput, "cube corners are not in coordinate order");
    }
  }
  return {z, mask};
}

}  // namespace detail

/// X(K): Y(K) cut along the hyperplanes x_s = 1/2. Original vertices keep
/// their ids; the centre of the j-th cube of Y (dimension by dimension, in
/// cube order) gets id 2^|S| + j.
inline CubicalComplex subdivide_half(const CubicalComplex& y) {
  const std::size_t total = y.vertex_count();
  if (total < 2 || !std::has_single_bit(total) || total > (std::size_t{1} << 30)) {
    throw Error(ErrorKind::NotDavisOutput, "vertex count is not a power of two");
  }
  const std::size_t s = static_cast<std::size_t>(std::countr_zero(total));
  std::unordered_map<std::uint64_t, VertexId> centre;
  auto key = [s](std::uint32_t z, std::uint32_t mask) { return (std::uint64_t{mask} << s) | z; };
  VertexId next = static_cast<VertexId>(total);
  for (std::size_t k = 1; k <= y.dimension(); ++k) {
    for (CubeIndex q = 0; q < y.count(k); ++q) {
      auto [z, mask] = detail::davis_face(y, k, q);
      centre.emplace(key(z, mask), next++);
    }
  }
  auto point = [&](std::uint32_t z, std::uint32_t mask) -> VertexId {
    if (mask == 0) return z;
    return centre.at(key(z, mask));
  };
  std::vector<Cube> cubes;
  for (std::size_t k = 0; k <= y.dimension(); ++k) {
    for (CubeIndex q = 0; q < y.count(k); ++q) {
      if (!y.is_maximal(k, q)) continue;
      if (k == 0) {
        cubes.push_back({0, {static_cast<VertexId>(q)}});
        continue;
      }
      auto [z, mask] = detail::davis_face(y, k, q);
      // halves h and corners b run over bits of T; doubled coordinate h+b is 0, 1 (centre) or 2
      for (std::size_t h = 0; h < (std::size_t{1} << k); ++h) {
        Cube cube{k, std::vector<VertexId>(std::size_t{1} << k)};
        for (std::size_t b = 0; b < cube.corners.size(); ++b) {
          std::uint32_t corner_z = z;
          std::uint32_t corner_mask = 0;
          for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t coord = static_cast<std::uint32_t>(detail::deposit(std::size_t{1} << j, mask));
            const std::size_t doubled = ((h >> j) & 1u) + ((b >> j) & 1u);
            if (doubled == 1) corner_mask |= coord;
            if (doubled == 2) corner_z |= coord;
          }
          cube.corners[b] = point(corner_z, corner_mask);
        }
        cubes.push_back(std::move(cube));
      }
    }
  }
  return CubicalComplex::build(next, cubes, {.check_axioms = false, .close_faces = true});
}

/// Product of cycles of the given lengths. Vertex ids are mixed radix with
/// the first factor fastest.
inline CubicalComplex torus_grid(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw Error(ErrorKind::BadDims, "torus needs at least one factor");
  std::size_t count = 1;
  for (std::size_t d : dims) {
    if (d < 3) throw Error(ErrorKind::BadDims, "every torus factor needs length >= 3");
    if (dims.size() > 16 || count > (std::size_t{1} << 24) / d) throw Error(ErrorKind::TooLarge, "torus too large");
    count *= d;
  }
  const std::size_t n = dims.size();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t j = 1; j < n; ++j) stride[j] = stride[j - 1] * dims[j - 1];
  std::vector<Cube> cubes;
  std::vector<std::size_t> x(n, 0);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t j = 0; j < n; ++j) x[j] = (v / stride[j]) % dims[j];
    Cube cube{n, std::vector<VertexId>(std::size_t{1} << n)};
    for (std::size_t b = 0; b < cube.corners.size(); ++b) {
      std::size_t id = 0;
      for (std::size_t j = 0; j < n; ++j) id += ((x[j] + ((b >> j) & 1u)) % dims[j]) * stride[j];
      cube.corners[b] = static_cast<VertexId>(id);
    }
    cubes.push_back(std::move(cube));
  }
  return CubicalComplex::from_cubes(count, cubes);
}

/// C1 x C2 with vertex (a, b) numbered a * |V(C2)| + b; corner bits of the
/// first factor come first.
inline CubicalComplex product(const CubicalComplex& c1, const CubicalComplex& c2) {
  const std::size_t n2 = c2.vertex_count();
  const auto m1 = c1.maximal_cubes();
  const auto m2 = c2.maximal_cubes();
  std::vector<Cube> cubes;
  for (const auto& q1 : m1) {
    for (const auto& q2 : m2) {
      Cube cube{q1.dim + q2.dim, std::vector<VertexId>(std::size_t{1} << (q1.dim + q2.dim))};
      for (std::size_t p = 0; p < cube.corners.size(); ++p) {
        const std::size_t lo = p & ((std::size_t{1} << q1.dim) - 1);
        const std::size_t hi = p >> q1.dim;
        cube.corners[p] = static_cast<VertexId>(q1.corners[lo] * n2 + q2.corners[hi]);
      }
      cubes.push_back(std::move(cube));
    }
  }
  return CubicalComplex::from_cubes(c1.vertex_count() * n2, cubes);
}

/// A graph (1-dimensional simplicial complex) as a 1-dimensional cubical complex.
inline CubicalComplex graph_complex(const SimplicialComplex& g) {
  if (g.dimension() > 1) throw Error(ErrorKind::BadSpec, "graph input must have dimension at most 1");
  std::vector<Cube> cubes;
  for (const auto& e : g.simplices(1)) cubes.push_back({1, {e[0], e[1]}});
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) cubes.push_back({0, {v}});
  return CubicalComplex::from_cubes(g.vertex_count(), cubes);
}

inline CubicalComplex cycle(std::size_t length) { return torus_grid({length}); }

}  // namespace fcc

#endif  // FCC_GENERATORS_HPP
