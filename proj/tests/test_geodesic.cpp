#include <gtest/gtest.h>

#include "support.hpp"

using namespace fcc;

namespace {

EdgeColoring colors_of(const CubicalComplex& c) { return coloring_from(require_fcc(c)); }

CubicalComplex unit_square() { return load_complex("cubical-complex v1\nvertices 4\ncube 2 0 1 2 3\n"); }

EdgePath walk(const CubicalComplex& c, const std::vector<VertexId>& vs, bool closed) {
  EdgePath p;
  p.base = vs.front();
  p.closed = closed;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) p.steps.push_back(leaving(c, *c.edge_between(vs[i], vs[i + 1]), vs[i]));
  return p;
}

// Directions at the Y origin of X(K), labelled by the vertex of K they match
// under some isomorphism of the link with K.
std::vector<OrientedEdge> origin_directions_by_k_vertex(const CubicalComplex& x, const SimplicialComplex& k) {
  auto lk = link(x, 0);
  auto iso = find_isomorphism(lk.complex, k);
  EXPECT_TRUE(iso.has_value());
  std::vector<OrientedEdge> out(k.vertex_count());
  for (std::size_t a = 0; a < iso->size(); ++a) out[(*iso)[a]] = lk.directions[a];
  return out;
}

// Subdivided theta graph: hubs 0 and 1 joined through 2, 3 and 4.
CubicalComplex theta() {
  return graph_complex(SimplicialComplex::from_simplices(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}));
}

bool backtracks(const EdgePath& p) {
  for (std::size_t t = 0; t + 1 < p.steps.size(); ++t) {
    if (p.steps[t].edge == p.steps[t + 1].edge) return true;
  }
  return false;
}

}  // namespace

TEST(DistanceClass, SquareCornerIsQuarter) {
  auto c = unit_square();
  auto a = leaving(c, *c.edge_between(0, 1), 0);
  auto b = leaving(c, *c.edge_between(0, 2), 0);
  EXPECT_EQ(distance_class(c, a, b), DistanceClass::Quarter);
  EXPECT_EQ(distance_class(c, a, a), DistanceClass::Zero);
}

TEST(DistanceClass, HemispherexPolesArePi) {
  auto h = hemispherex({2, {1, 1, 1}, false});
  auto x = corpus::davis_X(h.complex);
  auto dirs = origin_directions_by_k_vertex(x, h.complex);
  auto col = colors_of(x);
  for (std::size_t a = 0; a < h.poles.size(); ++a) {
    for (std::size_t b = a + 1; b < h.poles.size(); ++b) {
      const auto pa = dirs[h.poles[a].vertex];
      const auto pb = dirs[h.poles[b].vertex];
      EXPECT_EQ(distance_class(x, pa, pb), DistanceClass::Pi);
      EXPECT_NE(col.color_of[pa.edge], col.color_of[pb.edge]);
    }
  }
}

TEST(DistanceClass, DoubleArcPolesAreMoreThanPi) {
  auto h = hemispherex({1, {1, 1}, true});
  auto x = corpus::davis_X(h.complex);
  auto dirs = origin_directions_by_k_vertex(x, h.complex);
  ASSERT_EQ(h.poles.size(), 2u);
  const auto p = dirs[h.poles[0].vertex];
  const auto q = dirs[h.poles[1].vertex];
  EXPECT_EQ(distance_class(x, p, q), DistanceClass::MoreThanPi);
  // exact metric on the graph link: three hops
  auto g = oracle::link_graph(x, 0);
  auto pos = [&](OrientedEdge e) { return static_cast<int>(std::find(g.edges.begin(), g.edges.end(), e.edge) - g.edges.begin()); };
  const auto hops = oracle::hops_from(g, pos(p))[pos(q)];
  EXPECT_EQ(hops, 3u);
  EXPECT_NEAR(oracle::exact_link_distance(hops), 3 * 3.141592653589793 / 2, 1e-12);
}

TEST(DistanceClass, MismatchedBase) {
  auto c = unit_square();
  auto a = leaving(c, *c.edge_between(0, 1), 0);
  auto b = leaving(c, *c.edge_between(2, 3), 2);
  try {
    distance_class(c, 0, LinkVertex{0, a}, LinkVertex{0, b});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MismatchedBase);
  }
}

TEST(DistanceClass, SymmetricAndSameColorNeverQuarter) {
  std::vector<corpus::Entry> entries = corpus::dimension2();
  entries.push_back({"X(octahedral hemispherex)", corpus::davis_X(corpus::octahedral_hemispherex())});
  entries.push_back({"torus(4,4,4)", torus_grid({4, 4, 4})});
  for (const auto& entry : entries) {
    const auto& c = entry.complex;
    auto col = colors_of(c);
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
      VertexStar star(c, v);
      for (std::size_t a = 0; a < star.degree(); ++a) {
        for (std::size_t b = 0; b < star.degree(); ++b) {
          const auto d = distance_class(star, a, b);
          ASSERT_EQ(d, distance_class(star, b, a)) << entry.name;
          if (a != b && col.color_of[star.edge(a)] == col.color_of[star.edge(b)]) {
            ASSERT_NE(d, DistanceClass::Quarter) << entry.name;
          }
        }
      }
    }
  }
}

TEST(DistanceClass, MatchesExactMetricOnGraphLinks) {
  for (const auto& entry : corpus::dimension2()) {
    const auto& c = entry.complex;
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
      auto g = oracle::link_graph(c, v);
      for (std::size_t a = 0; a < g.edges.size(); ++a) {
        const auto hops = oracle::hops_from(g, static_cast<int>(a));
        for (std::size_t b = 0; b < g.edges.size(); ++b) {
          const auto expected = oracle::class_of_distance(oracle::exact_link_distance(hops[b]));
          ASSERT_EQ(distance_class(c, leaving(c, g.edges[a], v), leaving(c, g.edges[b], v)), expected)
              << entry.name << " vertex " << v;
        }
      }
    }
  }
}

TEST(LocalGeodesic, AroundSquareFails) {
  auto c = unit_square();
  auto p = walk(c, {0, 1, 3, 2}, false);
  auto r = is_local_geodesic(c, p);
  EXPECT_FALSE(r.geodesic);
  EXPECT_EQ(r.junction, 1u);
  EXPECT_EQ(r.angle, DistanceClass::Quarter);
}

TEST(LocalGeodesic, StraightTorusLine) {
  auto c = torus_grid({4, 4});
  auto p = walk(c, {0, 1, 2, 3, 0}, true);
  EXPECT_TRUE(is_local_geodesic(c, p).geodesic);
  auto q = walk(c, {0, 4, 8, 12, 0}, true);
  EXPECT_TRUE(is_local_geodesic(c, q).geodesic);
}

TEST(LocalGeodesic, BacktrackFails) {
  auto c = torus_grid({4, 4});
  auto p = walk(c, {0, 1, 0}, false);
  auto r = is_local_geodesic(c, p);
  EXPECT_FALSE(r.geodesic);
  EXPECT_EQ(r.angle, DistanceClass::Zero);
}

TEST(LocalGeodesic, InvalidPathFails) {
  auto c = torus_grid({4, 4});
  EdgePath p = walk(c, {0, 1, 2}, false);
  p.base = 5;
  EXPECT_FALSE(is_local_geodesic(c, p).geodesic);
}

TEST(Transfer, SingleSquare) {
  auto c = unit_square();
  auto e = leaving(c, *c.edge_between(0, 1), 0);
  auto t = transfer(c, e);
  ASSERT_EQ(t.from.size(), 1u);
  EXPECT_EQ(t.from[0], leaving(c, *c.edge_between(0, 2), 0));
  EXPECT_EQ(t.to[0], leaving(c, *c.edge_between(1, 3), 1));
}

TEST(Transfer, InvolutionColorsAndPi) {
  std::vector<corpus::Entry> entries = corpus::dimension2();
  entries.push_back({"X(octahedral hemispherex)", corpus::davis_X(corpus::octahedral_hemispherex())});
  for (const auto& entry : entries) {
    const auto& c = entry.complex;
    auto col = colors_of(c);
    for (CubeIndex edge = 0; edge < c.count(1); ++edge) {
      for (bool dir : {true, false}) {
        OrientedEdge e{edge, dir};
        auto d = transfer(c, e);
        auto back = transfer(c, e.reversed());
        ASSERT_EQ(d.from.size(), back.from.size()) << entry.name;
        for (std::size_t k = 0; k < d.from.size(); ++k) {
          ASSERT_EQ(back(d.to[k]), d.from[k]) << entry.name;
          ASSERT_EQ(col.color_of[d.from[k].edge], col.color_of[d.to[k].edge]) << entry.name;
          for (std::size_t m = 0; m < d.from.size(); ++m) {
            const bool pi_here = distance_class(c, d.from[k], d.from[m]) == DistanceClass::Pi;
            const bool pi_there = distance_class(c, d.to[k], d.to[m]) == DistanceClass::Pi;
            ASSERT_EQ(pi_here, pi_there) << entry.name;
          }
        }
      }
    }
  }
}

TEST(GraphConnector, ThetaLoopUsesOtherArcs) {
  auto g = theta();
  auto e = leaving(g, *g.edge_between(0, 2), 0);
  auto p = loop_through(g, std::vector<char>(g.count(1), 1), e);
  EXPECT_EQ(p.base, 0u);
  EXPECT_EQ(path_end(g, p), 0u);
  EXPECT_FALSE(backtracks(p));
  EXPECT_TRUE(is_local_geodesic(g, p).geodesic);
  std::set<CubeIndex> used;
  for (auto s : p.steps) used.insert(s.edge);
  EXPECT_EQ(used.size(), 6u);
  EXPECT_EQ(p.steps.size(), 8u);
}

TEST(GraphConnector, EndsHonored) {
  auto g = theta();
  auto e1 = leaving(g, *g.edge_between(0, 2), 0);
  auto e2 = leaving(g, *g.edge_between(1, 3), 1);
  auto c = graph_connector(g, e1, e2);
  EdgePath whole;
  whole.base = 0;
  whole.steps.push_back(e1);
  whole.steps.insert(whole.steps.end(), c.steps.begin(), c.steps.end());
  whole.steps.push_back(e2.reversed());
  EXPECT_TRUE(is_valid_path(g, whole));
  EXPECT_FALSE(backtracks(whole));
}

TEST(GraphConnector, DoubleArcGraphFromPole) {
  auto h = hemispherex({1, {1, 1}, true});
  auto g = graph_complex(h.complex);
  const VertexId pole = h.poles[0].vertex;
  for (CubeIndex edge : g.edges_at(pole)) {
    auto p = loop_through(g, std::vector<char>(g.count(1), 1), leaving(g, edge, pole));
    EXPECT_EQ(path_end(g, p), pole);
    EXPECT_FALSE(backtracks(p));
  }
}

TEST(GraphConnector, CircleRejected) {
  auto g = cycle(6);
  try {
    graph_connector(g, OrientedEdge{0, true}, OrientedEdge{0, true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IsCircle);
  }
}

TEST(GraphConnector, DisconnectedRejected) {
  std::vector<Simplex> edges{{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}};
  for (auto e : std::vector<Simplex>(edges)) edges.push_back({e[0] + 5, e[1] + 5});
  auto g = graph_complex(SimplicialComplex::from_simplices(10, edges));
  try {
    graph_connector(g, leaving(g, *g.edge_between(0, 2), 0), leaving(g, *g.edge_between(5, 7), 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConnected);
  }
}

TEST(Certificate, NeedsClosedPath) {
  auto c = torus_grid({4, 4});
  auto col = colors_of(c);
  try {
    rank_one_certificate(c, col, walk(c, {0, 1, 2}, false));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
  }
}

TEST(Certificate, SingleColorTorusLoopFails) {
  auto c = torus_grid({4, 4});
  auto col = colors_of(c);
  auto p = walk(c, {0, 1, 2, 3, 0}, true);
  EXPECT_TRUE(is_local_geodesic(c, p).geodesic);
  EXPECT_FALSE(rank_one_certificate(c, col, p));
}

TEST(Certificate, QuarterJunctionFails) {
  auto c = torus_grid({4, 4});
  auto col = colors_of(c);
  auto p = walk(c, {0, 1, 5, 4, 0}, true);
  EXPECT_EQ(path_colors(col, p), all_colors(2));
  EXPECT_FALSE(rank_one_certificate(c, col, p));
}

TEST(SimClasses, TorusSingletons) {
  auto c = torus_grid({4, 4, 4});
  auto col = colors_of(c);
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    auto s = sim_v_classes(c, col, v);
    ASSERT_EQ(s.classes, (std::vector<std::vector<int>>{{1}, {2}, {3}}));
    EXPECT_TRUE(s.witnesses.empty());
  }
}

TEST(SimClasses, HemispherexOriginSingleClass) {
  auto c = corpus::davis_X(corpus::octahedral_hemispherex());
  auto s = sim_v_classes(c, colors_of(c), 0);
  EXPECT_EQ(s.classes, (std::vector<std::vector<int>>{{1, 2, 3}}));
  for (const auto& w : s.witnesses) {
    EXPECT_LT(w.color_a, w.color_b);
    EXPECT_TRUE(at_least_pi(w.angle));
  }
}

TEST(SimClasses, ProductNeverMixesFactors) {
  auto c = product(corpus::davis_X(corpus::double_arc()), cycle(4));
  auto col = colors_of(c);
  const std::size_t n2 = 4;
  int cycle_color = 0;
  for (CubeIndex e = 0; e < c.count(1); ++e) {
    auto cs = c.corners(1, e);
    if (cs[0] / n2 == cs[1] / n2) {
      if (cycle_color == 0) cycle_color = col.color_of[e];
      ASSERT_EQ(col.color_of[e], cycle_color);
    }
  }
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    for (const auto& cls : sim_v_classes(c, col, v).classes) {
      if (std::find(cls.begin(), cls.end(), cycle_color) != cls.end()) {
        ASSERT_EQ(cls.size(), 1u);
      }
    }
  }
}

TEST(Builders, DoubleArcAllColors) {
  auto c = corpus::davis_X(corpus::double_arc());
  auto col = colors_of(c);
  auto p = build_all_color_geodesic(c, col, 0, {1, 2});
  EXPECT_TRUE(p.closed);
  EXPECT_TRUE(is_local_geodesic(c, p).geodesic);
  EXPECT_EQ(path_colors(col, p), all_colors(2));
  EXPECT_TRUE(rank_one_certificate(c, col, p));
}

TEST(Builders, HemispherexAllColors) {
  auto c = corpus::davis_X(corpus::octahedral_hemispherex());
  auto col = colors_of(c);
  auto p = build_all_color_geodesic(c, col, 0, {3, 1, 2});
  EXPECT_TRUE(rank_one_certificate(c, col, p));
  EXPECT_EQ(p.base, 0u);
}

TEST(Builders, SingleColorBaseCase) {
  auto c = torus_grid({4, 4, 4});
  auto col = colors_of(c);
  for (int i = 1; i <= 3; ++i) {
    auto p = build_all_color_geodesic(c, col, 5, {i});
    EXPECT_TRUE(p.closed);
    EXPECT_TRUE(is_local_geodesic(c, p).geodesic);
    EXPECT_EQ(path_colors(col, p), color_bit(i));
  }
}

TEST(Builders, NotSingleClass) {
  auto c = torus_grid({4, 4, 4});
  try {
    build_all_color_geodesic(c, colors_of(c), 0, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSingleClass);
  }
}

TEST(Builders, StrictPiDoubleArc) {
  auto h = hemispherex({1, {1, 1}, true});
  auto x = corpus::davis_X(h.complex);
  auto col = colors_of(x);
  auto dirs = origin_directions_by_k_vertex(x, h.complex);
  auto p = build_strict_pi_geodesic(x, col, 0, dirs[h.poles[0].vertex], dirs[h.poles[1].vertex]);
  EXPECT_TRUE(rank_one_certificate(x, col, p));
  EXPECT_TRUE(has_strict_pi_junction(x, col, p));
}

TEST(Builders, StrictPiPreconditions) {
  auto h = hemispherex({2, {1, 1, 1}, false});
  auto x = corpus::davis_X(h.complex);
  auto col = colors_of(x);
  auto dirs = origin_directions_by_k_vertex(x, h.complex);
  const auto p0 = dirs[h.poles[0].vertex];
  const auto p1 = dirs[h.poles[1].vertex];
  ASSERT_EQ(distance_class(x, p0, p1), DistanceClass::Pi);
  auto expect_precondition = [&](OrientedEdge a, OrientedEdge b) {
    try {
      build_strict_pi_geodesic(x, col, 0, a, b);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
    }
  };
  expect_precondition(p0, p1);
  // two directions of one color
  VertexStar star(x, 0);
  for (std::size_t a = 0; a < star.degree(); ++a) {
    for (std::size_t b = a + 1; b < star.degree(); ++b) {
      if (col.color_of[star.edge(a)] == col.color_of[star.edge(b)]) {
        expect_precondition(leaving(x, star.edge(a), 0), leaving(x, star.edge(b), 0));
        return;
      }
    }
  }
  FAIL() << "no same-color pair at the origin";
}

TEST(LinkStructure, TwoDirectionsMeansJoin) {
  std::vector<corpus::Entry> entries = corpus::dimension2();
  for (auto& e : corpus::dimension3()) {
    if (entries.size() >= 14) break;
    entries.push_back(std::move(e));
  }
  for (const auto& entry : entries) {
    const auto& c = entry.complex;
    auto col = colors_of(c);
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
      VertexStar star(c, v);
      std::map<int, std::vector<std::size_t>> by_color;
      for (std::size_t a = 0; a < star.degree(); ++a) by_color[col.color_of[star.edge(a)]].push_back(a);
      for (const auto& [i, own] : by_color) {
        bool cross_pi = false;
        for (std::size_t a : own) {
          for (std::size_t b = 0; b < star.degree(); ++b) {
            if (col.color_of[star.edge(b)] == i) continue;
            if (own.size() == 2) {
              ASSERT_TRUE(star.adjacent(a, b)) << entry.name;
            }
            cross_pi = cross_pi || at_least_pi(distance_class(star, a, b));
          }
        }
        if (cross_pi) {
          ASSERT_GE(own.size(), 3u) << entry.name;
        }
      }
    }
  }
}
