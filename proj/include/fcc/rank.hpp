#ifndef FCC_RANK_HPP
#define FCC_RANK_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <future>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "fcc/cubical.hpp"
#include "fcc/decomposition.hpp"
#include "fcc/folding.hpp"
#include "fcc/geodesic.hpp"
#include "fcc/validate.hpp"

namespace fcc {

struct Bipartition {
  ColorSet t = 0;
  ColorSet s = 0;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

namespace detail {

/// Runs body(begin, end) over [0, count) in `jobs` contiguous chunks.
template <class Body>
void parallel_chunks(std::size_t count, unsigned jobs, Body body) {
  if (jobs <= 1 || count < 2 * jobs) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::future<void>> tasks;
  const std::size_t chunk = (count + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    tasks.push_back(std::async(std::launch::async, body, begin, std::min(count, begin + chunk)));
  }
  for (auto& t : tasks) t.get();
}

}  // namespace detail

/// bad[i][j] (colors 1-based): some vertex has an i-edge and a j-edge that
/// span no square.
inline std::vector<std::vector<char>> non_square_color_pairs(const CubicalComplex& c, const EdgeColoring& coloring,
                                                             unsigned jobs = 1) {
  const std::size_t n = coloring.colors;
  std::vector<std::vector<std::vector<char>>> partial(std::max(1u, jobs));
  std::vector<std::vector<char>> bad(n + 1, std::vector<char>(n + 1, 0));
  std::mutex merge;
  detail::parallel_chunks(c.vertex_count(), jobs, [&](std::size_t begin, std::size_t end) {
    std::vector<std::vector<char>> local(n + 1, std::vector<char>(n + 1, 0));
    for (VertexId v = static_cast<VertexId>(begin); v < end; ++v) {
      VertexStar star(c, v);
      for (std::size_t a = 0; a < star.degree(); ++a) {
        for (std::size_t b = a + 1; b < star.degree(); ++b) {
          const int ca = coloring.color_of[star.edge(a)];
          const int cb = coloring.color_of[star.edge(b)];
          if (ca == cb || star.adjacent(a, b)) continue;
          local[ca][cb] = local[cb][ca] = 1;
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) bad[i][j] |= local[i][j];
    }
  });
  return bad;
}

/// Bipartitions T | S of the colors (1 in T) such that at every vertex every
/// T-edge and S-edge span a square. Each one certifies that the universal
/// cover splits as a product.
inline std::vector<Bipartition> splitting_bipartitions(const CubicalComplex& c, const EdgeColoring& coloring,
                                                       unsigned jobs = 1) {
  const std::size_t n = coloring.colors;
  std::vector<Bipartition> out;
  if (n < 2) return out;
  const auto bad = non_square_color_pairs(c, coloring, jobs);
  const ColorSet all = all_colors(n);
  for (ColorSet t = 1; t < all; t += 2) {
    const ColorSet s = all & ~t;
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      if (!(t & color_bit(static_cast<int>(i)))) continue;
      for (std::size_t j = 1; j <= n && ok; ++j) {
        if (s & color_bit(static_cast<int>(j))) ok = !bad[i][j];
      }
    }
    if (ok) out.push_back({t, s});
  }
  return out;
}

/// Independent re-check of one bipartition straight from square incidence.
inline bool verify_split(const CubicalComplex& c, const EdgeColoring& coloring, Bipartition b) {
  if (b.t == 0 || b.s == 0 || (b.t & b.s) != 0 || (b.t | b.s) != all_colors(coloring.colors)) return false;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    for (CubeIndex x : c.edges_at(v)) {
      if (!(b.t & color_bit(coloring.color_of[x]))) continue;
      for (CubeIndex y : c.edges_at(v)) {
        if (!(b.s & color_bit(coloring.color_of[y]))) continue;
        bool square = false;
        for (CubeIndex sq : c.cofaces(1, x)) {
          auto f = c.facets(2, sq);
          if (std::find(f.begin(), f.end(), y) != f.end()) {
            square = true;
            break;
          }
        }
        if (!square) return false;
      }
    }
  }
  return true;
}

/// What a rank one witness rests on: a closed 1-skeleton geodesic using every
/// color, or one with a junction of angle more than pi between two colors.
enum class RankOneBasis { AllColors, StrictPiJunction };

struct SplitWitness {
  Bipartition first;
  std::vector<Bipartition> all;
};

struct RankOneWitness {
  EdgePath path;
  ColorSet colors = 0;
  RankOneBasis basis = RankOneBasis::AllColors;
  std::string step;  ///< "strict-pi", "single-class", "rigidity", "search"
  VertexId at = 0;
};

struct Inconclusive {
  std::string reason;
  std::size_t length_cap = 0;
  std::size_t nodes = 0;
};

using Verdict = std::variant<SplitWitness, RankOneWitness, Inconclusive>;

struct CoveringRow {
  int color = 0;
  std::size_t maps = 0;       ///< attaching maps (two per edge space)
  std::size_t coverings = 0;
  bool all_covering = false;
};

struct RankOptions {
  unsigned jobs = 1;
  std::size_t length_cap = 0;        ///< 0: 4 * n * diameter
  std::size_t node_budget = 2000000;
  bool covering_table = true;
  const Folding* folding = nullptr;  ///< verified and used instead of searching
};

struct RankReport {
  Verdict verdict;
  Folding folding_used;
  std::map<std::string, std::size_t> partition_counts;  ///< ~_v partition -> number of vertices
  std::optional<VertexId> single_class_vertex;
  std::vector<CoveringRow> covering;
  std::vector<std::string> steps;  ///< log of the steps run
};

inline std::string partition_string(const std::vector<std::vector<int>>& classes) {
  std::string out;
  for (const auto& cls : classes) {
    out += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + std::to_string(cls[i]);
    out += "}";
  }
  return out;
}

inline std::vector<CoveringRow> covering_table(const CubicalComplex& c, const EdgeColoring& coloring) {
  std::vector<CoveringRow> out;
  for (int i = 1; i <= static_cast<int>(coloring.colors); ++i) {
    auto g = graph_of_spaces(c, coloring, i);
    CoveringRow row;
    row.color = i;
    for (const auto& e : g.edges) {
      const auto& y = g.edge_spaces[e.hyperplane].piece.complex;
      row.maps += 2;
      row.coverings += is_covering(y, g.vertex_spaces[e.side0].complex, e.attach0).covering ? 1 : 0;
      row.coverings += is_covering(y, g.vertex_spaces[e.side1].complex, e.attach1).covering ? 1 : 0;
    }
    row.all_covering = row.maps == row.coverings;
    out.push_back(row);
  }
  return out;
}

namespace detail {

inline std::optional<RankOneWitness> strict_pi_step(const CubicalComplex& c, const EdgeColoring& coloring) {
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    VertexStar star(c, v);
    for (std::size_t a = 0; a < star.degree(); ++a) {
      for (std::size_t b = a + 1; b < star.degree(); ++b) {
        if (coloring.color_of[star.edge(a)] == coloring.color_of[star.edge(b)]) continue;
        if (distance_class(star, a, b) != DistanceClass::MoreThanPi) continue;
        RankOneWitness w;
        w.path = build_strict_pi_geodesic(c, coloring, v, leaving(c, star.edge(a), v), leaving(c, star.edge(b), v));
        w.colors = path_colors(coloring, w.path);
        w.basis = w.colors == all_colors(coloring.colors) ? RankOneBasis::AllColors : RankOneBasis::StrictPiJunction;
        w.step = "strict-pi";
        w.at = v;
        return w;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<RankOneWitness> single_class_step(const CubicalComplex& c, const EdgeColoring& coloring,
                                                       RankReport* report) {
  std::optional<RankOneWitness> found;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    auto sim = sim_v_classes(c, coloring, v);
    if (report) ++report->partition_counts[partition_string(sim.classes)];
    if (found || sim.classes.size() != 1) continue;
    if (report) report->single_class_vertex = v;
    RankOneWitness w;
    w.path = build_all_color_geodesic(c, coloring, v, sim.classes.front());
    w.colors = path_colors(coloring, w.path);
    w.step = "single-class";
    w.at = v;
    found = std::move(w);
    if (!report) break;
  }
  return found;
}

/// The construction from the dimension-3 rigidity argument: inside one
/// component C of a single color ("blue") find v' with a blue/red pair and
/// v'' with a blue/green pair at angle at least pi, join them inside C, and
/// hang a red loop at v' and a green loop at v''.
inline std::optional<RankOneWitness> rigidity_step(const CubicalComplex& c, const EdgeColoring& coloring,
                                                   std::size_t max_attempts = 256) {
  if (coloring.colors != 3) return std::nullopt;
  std::array<int, 3> roles{1, 2, 3};
  std::vector<VertexStar> stars;
  stars.reserve(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v) stars.emplace_back(c, v);
  struct Pair {
    VertexId at;
    OrientedEdge blue;
    OrientedEdge other;
  };
  do {
    const int blue = roles[0];
    const int green = roles[1];
    const int red = roles[2];
    std::vector<char> done(c.vertex_count(), 0);
    for (VertexId root = 0; root < c.vertex_count(); ++root) {
      if (done[root]) continue;
      const auto allowed = color_component_edges(c, coloring, blue, root);
      const auto members = reachable(c, allowed, root);
      for (VertexId u : members) done[u] = 1;
      std::vector<Pair> with_red;
      std::vector<Pair> with_green;
      for (VertexId u : members) {
        const auto& star = stars[u];
        std::optional<Pair> r;
        std::optional<Pair> g;
        for (std::size_t a = 0; a < star.degree(); ++a) {
          if (coloring.color_of[star.edge(a)] != blue) continue;
          for (std::size_t b = 0; b < star.degree(); ++b) {
            const int cb = coloring.color_of[star.edge(b)];
            if ((cb != red || r) && (cb != green || g)) continue;
            if (!at_least_pi(distance_class(star, a, b))) continue;
            Pair p{u, leaving(c, star.edge(a), u), leaving(c, star.edge(b), u)};
            (cb == red ? r : g) = p;
          }
        }
        if (r) with_red.push_back(*r);
        if (g) with_green.push_back(*g);
      }
      if (with_red.empty() || with_green.empty()) continue;
      if (connector_status(c, allowed, with_red.front().blue, with_green.front().blue) != ConnectorStatus::Ok) continue;
      std::size_t attempts = 0;
      for (const auto& p1 : with_red) {
        for (const auto& p2 : with_green) {
          if (++attempts > max_attempts) break;
          try {
            EdgePath path;
            path.base = p1.at;
            path.steps.push_back(p1.blue);
            auto mid = graph_connector(c, allowed, p1.blue, p2.blue);
            path.steps.insert(path.steps.end(), mid.steps.begin(), mid.steps.end());
            path.steps.push_back(p2.blue.reversed());
            const EdgePath green_loop = loop_through(c, color_component_edges(c, coloring, green, p2.at), p2.other);
            const EdgePath red_loop = loop_through(c, color_component_edges(c, coloring, red, p1.at), p1.other);
            EdgePath full = then(c, then(c, then(c, path, green_loop), reversed(c, path)), red_loop);
            full = closed_path(c, full);
            if (!rank_one_certificate(c, coloring, full)) continue;
            RankOneWitness w;
            w.path = std::move(full);
            w.colors = path_colors(coloring, w.path);
            w.step = "rigidity";
            w.at = p1.at;
            return w;
          } catch (const Error&) {
            continue;
          }
        }
        if (attempts > max_attempts) break;
      }
    }
  } while (std::next_permutation(roles.begin(), roles.end()));
  return std::nullopt;
}

inline std::size_t diameter(const CubicalComplex& c) {
  std::size_t best = 0;
  std::vector<std::size_t> dist(c.vertex_count());
  for (VertexId s = 0; s < c.vertex_count(); ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      best = std::max(best, dist[v]);
      for (CubeIndex e : c.edges_at(v)) {
        const VertexId w = c.edge_other(e, v);
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return best;
}

/// Depth-first search for closed local geodesics using every color, up to
/// `cap` edges and `budget` expanded nodes.
inline std::optional<RankOneWitness> bounded_search(const CubicalComplex& c, const EdgeColoring& coloring,
                                                    std::size_t cap, std::size_t budget, std::size_t& nodes) {
  std::vector<VertexStar> stars;
  stars.reserve(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v) stars.emplace_back(c, v);
  const ColorSet all = all_colors(coloring.colors);
  auto turn_ok = [&](OrientedEdge in, OrientedEdge out) {
    const VertexId at = head(c, in);
    const auto& star = stars[at];
    return at_least_pi(distance_class(star, *star.local_index(in.edge), *star.local_index(out.edge)));
  };
  std::vector<OrientedEdge> walk;
  std::optional<EdgePath> found;
  auto dfs = [&](auto&& self, VertexId base, ColorSet used) -> bool {
    if (nodes++ >= budget) return false;
    const OrientedEdge last = walk.back();
    const VertexId at = head(c, last);
    if (at == base && used == all && turn_ok(last, walk.front())) {
      found = EdgePath{base, walk, true};
      return true;
    }
    if (walk.size() >= cap) return false;
    for (CubeIndex e : c.edges_at(at)) {
      const OrientedEdge next = leaving(c, e, at);
      if (!turn_ok(last, next)) continue;
      walk.push_back(next);
      if (self(self, base, used | color_bit(coloring.color_of[e]))) return true;
      walk.pop_back();
      if (nodes >= budget) return false;
    }
    return false;
  };
  for (VertexId v = 0; v < c.vertex_count() && nodes < budget; ++v) {
    for (CubeIndex e : c.edges_at(v)) {
      walk.assign(1, leaving(c, e, v));
      if (dfs(dfs, v, color_bit(coloring.color_of[e]))) {
        RankOneWitness w;
        w.path = *found;
        w.colors = path_colors(coloring, w.path);
        w.step = "search";
        w.at = v;
        return w;
      }
      if (nodes >= budget) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Runs the rank one constructions (strict-pi junction, single ~_v class,
/// and in dimension 3 the rigidity construction) without the split test.
/// A witness using every color is preferred over a strict-pi one.
inline std::optional<RankOneWitness> find_rank_one_witness(const CubicalComplex& c, const EdgeColoring& coloring,
                                                           RankReport* report = nullptr) {
  auto log = [&](const std::string& line) {
    if (report) report->steps.push_back(line);
  };
  auto strict = detail::strict_pi_step(c, coloring);
  log(strict ? "strict-pi: witness at vertex " + std::to_string(strict->at) : "strict-pi: no pair");
  if (strict && strict->basis == RankOneBasis::AllColors) return strict;
  auto single = detail::single_class_step(c, coloring, report);
  log(single ? "single-class: witness at vertex " + std::to_string(single->at) : "single-class: none");
  if (single) return single;
  if (coloring.colors == 3) {
    auto rigid = detail::rigidity_step(c, coloring);
    log(rigid ? "rigidity: witness at vertex " + std::to_string(rigid->at) : "rigidity: none");
    if (rigid) return rigid;
  }
  return strict;
}

namespace detail {

inline RankReport start_report(const CubicalComplex& c, const RankOptions& options) {
  RankReport report;
  if (options.folding) {
    auto checked = validate_fcc(c, options.folding);
    if (!checked.is_fcc) throw Error(ErrorKind::NotFCC, checked.note.empty() ? "validation failed" : checked.note);
    report.folding_used = *options.folding;
  } else {
    report.folding_used = require_fcc(c);
  }
  if (options.covering_table) report.covering = covering_table(c, coloring_from(report.folding_used));
  return report;
}

inline bool split_step(const CubicalComplex& c, const EdgeColoring& coloring, const RankOptions& options,
                       RankReport& report) {
  auto splits = splitting_bipartitions(c, coloring, options.jobs);
  report.steps.push_back("split: " + std::to_string(splits.size()) + " bipartition(s)");
  if (splits.empty()) return false;
  report.verdict = SplitWitness{splits.front(), splits};
  return true;
}

}  // namespace detail

/// Rank dichotomy for finite FCCs of dimension 3: a product splitting or a
/// closed rank one geodesic in the 1-skeleton.
inline RankReport detect_rank3(const CubicalComplex& c, const RankOptions& options = {}) {
  if (c.dimension() != 3) throw Error(ErrorKind::NotDim3, "complex has dimension " + std::to_string(c.dimension()));
  auto report = detail::start_report(c, options);
  const auto coloring = coloring_from(report.folding_used);
  if (detail::split_step(c, coloring, options, report)) return report;
  if (auto w = find_rank_one_witness(c, coloring, &report)) {
    report.verdict = std::move(*w);
    return report;
  }
  report.verdict = Inconclusive{"dichotomy violated: no splitting and no rank one construction succeeded", 0, 0};
  return report;
}

/// Any dimension: split test, the sufficient rank one constructions, then a
/// bounded search. Inconclusive when nothing is found.
inline RankReport detect_rank_general(const CubicalComplex& c, const RankOptions& options = {}) {
  auto report = detail::start_report(c, options);
  const auto coloring = coloring_from(report.folding_used);
  if (detail::split_step(c, coloring, options, report)) return report;
  auto w = find_rank_one_witness(c, coloring, &report);
  if (w && w->basis == RankOneBasis::AllColors) {
    report.verdict = std::move(*w);
    return report;
  }
  const std::size_t cap =
      options.length_cap ? options.length_cap : 4 * coloring.colors * std::max<std::size_t>(1, detail::diameter(c));
  std::size_t nodes = 0;
  auto searched = detail::bounded_search(c, coloring, cap, options.node_budget, nodes);
  report.steps.push_back("search: cap " + std::to_string(cap) + ", " + std::to_string(nodes) + " node(s)");
  if (searched) {
    report.verdict = std::move(*searched);
  } else if (w) {
    report.verdict = std::move(*w);
  } else {
    report.verdict = Inconclusive{"no construction applies and the bounded search found no closed geodesic", cap, nodes};
  }
  return report;
}

}  // namespace fcc

#endif  // FCC_RANK_HPP
