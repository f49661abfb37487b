#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace fcc;

namespace {

std::vector<std::size_t> counts(const CubicalComplex& c) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= c.dimension(); ++k) out.push_back(c.count(k));
  return out;
}

std::vector<std::size_t> counts(const SimplicialComplex& k) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= k.dimension(); ++d) out.push_back(k.count(static_cast<std::size_t>(d)));
  return out;
}

template <class F>
void expect_kind(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "fcc_generator_tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

// Renumber a product so that vertex (a, b) gets a + |V1| b.
CubicalComplex first_factor_fastest(const CubicalComplex& p, std::size_t n2) {
  const std::size_t n1 = p.vertex_count() / n2;
  std::vector<Cube> cubes;
  for (auto cube : p.maximal_cubes()) {
    for (auto& v : cube.corners) v = static_cast<VertexId>(v / n2 + n1 * (v % n2));
    cubes.push_back(cube);
  }
  return CubicalComplex::from_cubes(p.vertex_count(), cubes);
}

}  // namespace

TEST(Sphere, CircleIsFourCycle) {
  auto k = standard_sphere(1);
  EXPECT_EQ(counts(k), (std::vector<std::size_t>{4, 4}));
  EXPECT_TRUE(find_isomorphism(k, corpus::cycle_graph(4)).has_value());
}

TEST(Sphere, Octahedron) {
  EXPECT_EQ(counts(standard_sphere(2)), (std::vector<std::size_t>{6, 12, 8}));
  EXPECT_EQ(counts(standard_sphere(3)), (std::vector<std::size_t>{8, 24, 32, 16}));
}

TEST(Sphere, EquatorsAreSpheres) {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n + 1; ++i) {
      auto eq = equator_vertices(n, i);
      EXPECT_EQ(eq.size(), static_cast<std::size_t>(2 * n));
      EXPECT_EQ(std::count(eq.begin(), eq.end(), 2u * (i - 1)), 0);
    }
  }
}

TEST(Sphere, BadDimension) {
  expect_kind(ErrorKind::BadDimension, [] { standard_sphere(0); });
}

TEST(Hemispherex, OctahedralCounts) {
  auto h = hemispherex({2, {1, 1, 1}, false});
  EXPECT_EQ(counts(h.complex), (std::vector<std::size_t>{9, 24, 20}));
  ASSERT_EQ(h.poles.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(h.poles[i].equator, i + 1);
}

TEST(Hemispherex, DoubleArcGraph) {
  auto h = hemispherex({1, {1, 1}, true});
  EXPECT_EQ(counts(h.complex), (std::vector<std::size_t>{6, 8}));
  std::vector<std::size_t> degrees;
  for (std::uint32_t v = 0; v < 6; ++v) degrees.push_back(h.complex.neighbours()[v].size());
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<std::size_t>{2, 2, 3, 3, 3, 3}));
}

TEST(Hemispherex, HypothesesHold) {
  for (const auto& spec : std::vector<HemispherexSpec>{
           {2, {1, 1, 1}, false}, {2, {2, 1, 3}, false}, {3, {1, 1, 1, 1}, false}, {1, {2, 1}, true}}) {
    auto k = hemispherex(spec).complex;
    EXPECT_TRUE(is_flag(k).flag);
    EXPECT_TRUE(k.is_homogeneous());
    EXPECT_TRUE(k.has_no_boundary());
    auto col = fold_simplicial(k);
    ASSERT_TRUE(col.has_value());
    for (const auto& e : k.simplices(1)) EXPECT_NE((*col)[e[0]], (*col)[e[1]]);
  }
}

TEST(Hemispherex, PoleColorMatchesOmittedPair) {
  auto h = hemispherex({2, {2, 1, 1}, false});
  auto col = *fold_simplicial(h.complex);
  for (const auto& p : h.poles) EXPECT_EQ(col[p.vertex], col[2 * (p.equator - 1)]);
}

TEST(Hemispherex, BadSpec) {
  expect_kind(ErrorKind::BadSpec, [] { hemispherex({1, {1, 1}, false}); });
  expect_kind(ErrorKind::BadSpec, [] { hemispherex({2, {1, 1}, false}); });
  expect_kind(ErrorKind::BadSpec, [] { hemispherex({2, {1, 0, 1}, false}); });
}

TEST(DavisY, EdgeGivesSquare) {
  auto y = davis_Y(SimplicialComplex::from_simplices(2, {{0, 1}}));
  EXPECT_EQ(counts(y), (std::vector<std::size_t>{4, 4, 1}));
}

TEST(DavisY, DoubleArc) {
  auto k = corpus::double_arc();
  auto y = davis_Y(k);
  EXPECT_EQ(counts(y), (std::vector<std::size_t>{64, 192, 128}));
  EXPECT_EQ(counts(y), oracle::davis_face_counts(k));
  EXPECT_EQ(y.euler_characteristic(), 0);
}

TEST(DavisY, FaceCountFormula) {
  for (const auto& k : {standard_sphere(2), corpus::octahedral_hemispherex(), corpus::cycle_graph(5),
                        hemispherex({2, {1, 2, 1}, false}).complex}) {
    EXPECT_EQ(counts(davis_Y(k)), oracle::davis_face_counts(k));
  }
}

TEST(DavisY, EveryLinkIsK) {
  for (const auto& k : {corpus::double_arc(), corpus::octahedral_hemispherex()}) {
    auto y = davis_Y(k);
    for (VertexId v = 0; v < y.vertex_count(); ++v) {
      ASSERT_TRUE(find_isomorphism(link(y, v).complex, k).has_value()) << v;
    }
  }
}

TEST(DavisY, TooLarge) {
  expect_kind(ErrorKind::TooLarge, [] { davis_Y(corpus::cycle_graph(17)); });
  expect_kind(ErrorKind::TooLarge, [] { davis_Y(corpus::cycle_graph(6), 5); });
}

TEST(SubdivideHalf, Square) {
  auto x = subdivide_half(davis_Y(SimplicialComplex::from_simplices(2, {{0, 1}})));
  EXPECT_EQ(counts(x), (std::vector<std::size_t>{9, 12, 4}));
}

TEST(SubdivideHalf, DoubleArc) {
  auto x = corpus::davis_X(corpus::double_arc());
  EXPECT_EQ(counts(x), (std::vector<std::size_t>{384, 896, 512}));
  EXPECT_EQ(x.euler_characteristic(), 0);
  EXPECT_TRUE(validate_fcc(x).is_fcc);
}

TEST(SubdivideHalf, HemispherexTopCubes) {
  auto k = corpus::octahedral_hemispherex();
  auto y = davis_Y(k);
  EXPECT_EQ(counts(y), (std::vector<std::size_t>{512, 9 * 256, 24 * 128, 20 * 64}));
  auto x = subdivide_half(y);
  EXPECT_EQ(x.count(3), 10240u);
  EXPECT_EQ(counts(x), oracle::half_subdivision_counts(counts(y)));
}

TEST(SubdivideHalf, CountsAndEuler) {
  for (const auto& k : {corpus::cycle_graph(4), corpus::cycle_graph(6), standard_sphere(2),
                        hemispherex({1, {2, 1}, true}).complex}) {
    auto y = davis_Y(k);
    auto x = subdivide_half(y);
    EXPECT_EQ(counts(x), oracle::half_subdivision_counts(counts(y)));
    EXPECT_EQ(x.euler_characteristic(), y.euler_characteristic());
  }
}

TEST(SubdivideHalf, NotDavisOutput) {
  expect_kind(ErrorKind::NotDavisOutput, [] { subdivide_half(torus_grid({4, 6})); });
}

TEST(Torus, Counts) {
  EXPECT_EQ(counts(torus_grid({4, 4})), (std::vector<std::size_t>{16, 32, 16}));
  EXPECT_EQ(counts(torus_grid({4, 4, 4})), (std::vector<std::size_t>{64, 192, 192, 64}));
  auto c = torus_grid({5, 4});
  EXPECT_EQ(c.vertex_count(), 20u);
  EXPECT_TRUE(std::holds_alternative<NotFoldable>(find_folding(c)));
}

TEST(Torus, BadDims) {
  expect_kind(ErrorKind::BadDims, [] { torus_grid({4, 2}); });
  expect_kind(ErrorKind::BadDims, [] { torus_grid({}); });
}

TEST(Product, SquareTimesEdge) {
  auto sq = load_complex("cubical-complex v1\nvertices 4\ncube 2 0 1 2 3\n");
  auto e = load_complex("cubical-complex v1\nvertices 2\ncube 1 0 1\n");
  auto p = product(sq, e);
  EXPECT_EQ(counts(p), (std::vector<std::size_t>{8, 12, 6, 1}));
}

TEST(Product, DoubleArcTimesCycle) {
  auto p = product(corpus::davis_X(corpus::double_arc()), cycle(4));
  EXPECT_EQ(p.vertex_count(), 1536u);
  EXPECT_EQ(p.dimension(), 3u);
  EXPECT_TRUE(validate_fcc(p).is_fcc);
}

TEST(Product, TorusIsProductOfCycles) {
  EXPECT_EQ(product(cycle(4), cycle(4)), torus_grid({4, 4}));
  // product ids run the second factor fastest, torus ids the first
  EXPECT_EQ(first_factor_fastest(product(torus_grid({4, 6}), cycle(4)), 4), torus_grid({4, 6, 4}));
  EXPECT_EQ(first_factor_fastest(product(cycle(4), cycle(6)), 6), torus_grid({4, 6}));
}

TEST(GraphComplex, KeepsIsolatedVertices) {
  auto g = graph_complex(SimplicialComplex::from_simplices(3, {{0, 1}}));
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.count(1), 1u);
}

TEST(Generate, Grammar) {
  EXPECT_EQ(counts(std::get<SimplicialComplex>(generate("sphere:2"))), (std::vector<std::size_t>{6, 12, 8}));
  EXPECT_EQ(std::get<CubicalComplex>(generate("torus:4,4")), torus_grid({4, 4}));
  EXPECT_EQ(std::get<CubicalComplex>(generate("cycle:6")), cycle(6));
  EXPECT_EQ(std::get<SimplicialComplex>(generate("hemispherex:n=2,m=1,1,1")), corpus::octahedral_hemispherex());
  EXPECT_EQ(std::get<SimplicialComplex>(generate("hemispherex:n=1,m=1,1,ext")), corpus::double_arc());
  EXPECT_EQ(std::get<CubicalComplex>(generate("davisY:K=hemispherex:n=1,m=1,1,ext")), davis_Y(corpus::double_arc()));
  EXPECT_EQ(std::get<CubicalComplex>(generate("davisX:K=hemispherex:n=1,m=1,1,ext")),
            corpus::davis_X(corpus::double_arc()));
}

TEST(Generate, FromFiles) {
  auto k = write_temp("hx.sc", write_simplicial(corpus::octahedral_hemispherex()));
  auto x = std::get<CubicalComplex>(generate("davisX:K=" + k.string()));
  EXPECT_EQ(x.count(3), 10240u);
  auto a = write_temp("c4.cc", write_complex(cycle(4)));
  auto b = write_temp("c6.cc", write_complex(cycle(6)));
  EXPECT_EQ(first_factor_fastest(std::get<CubicalComplex>(generate("product:" + a.string() + "," + b.string())), 6),
            torus_grid({4, 6}));
  auto g = write_temp("theta.sc", write_simplicial(SimplicialComplex::from_simplices(
                                      5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}})));
  EXPECT_EQ(std::get<CubicalComplex>(generate("graph:" + g.string())).count(1), 6u);
}

TEST(Generate, BadSpecs) {
  for (const char* spec : {"torus", "torus:", "torus:4,x", "torus:4,2", "bogus:1", "cycle:4,4", "hemispherex:m=1,1,1",
                           "hemispherex:n=1,m=1,1", "hemispherex:n=2,q=3", "davisX:hemispherex:n=2,m=1,1,1",
                           "davisX:K=sphere:0x", "product:onlyone"}) {
    try {
      generate(spec);
      ADD_FAILURE() << spec;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadSpec) << spec << ": " << e.what();
    }
  }
  expect_kind(ErrorKind::BadDimension, [] { generate("sphere:0"); });
  expect_kind(ErrorKind::ParseError, [] { generate("graph:/nonexistent/file.sc"); });
}

TEST(Generate, DavisCap) {
  GenerateOptions options;
  options.davis_cap = 8;
  expect_kind(ErrorKind::TooLarge, [&] { generate("davisY:K=hemispherex:n=2,m=1,1,1", options); });
}

TEST(Generate, ProvenanceComment) {
  auto text = generated_text(generate("torus:4,4"), "torus:4,4");
  EXPECT_NE(text.find("# generated: torus:4,4"), std::string::npos);
  auto doc = parse_complex_document(text);
  EXPECT_EQ(doc.complex, torus_grid({4, 4}));
  ASSERT_FALSE(doc.comments.empty());
  EXPECT_EQ(doc.comments.front(), " generated: torus:4,4");
}
