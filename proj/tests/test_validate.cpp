#include <gtest/gtest.h>

#include "support.hpp"

using namespace fcc;

TEST(Validate, ThreeTorus) {
  auto r = validate_fcc(torus_grid({4, 4, 4}));
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.dimensionally_homogeneous);
  EXPECT_TRUE(r.no_boundary);
  EXPECT_TRUE(r.flag_links);
  EXPECT_TRUE(r.foldable);
  EXPECT_TRUE(r.is_fcc);
  EXPECT_EQ(r.dimension, 3u);
}

TEST(Validate, SingleSquareHasBoundary) {
  auto r = validate_fcc(load_complex("cubical-complex v1\nvertices 4\ncube 2 0 1 2 3\n"));
  EXPECT_FALSE(r.no_boundary);
  EXPECT_FALSE(r.is_fcc);
  ASSERT_TRUE(r.boundary_cube.has_value());
  EXPECT_EQ(r.boundary_cube->dim, 1u);
}

// Three squares around a vertex of a cube, without the cube: the corner link
// is a hollow triangle.
TEST(Validate, EmptyTriangleInLink) {
  auto c = load_complex(
      "cubical-complex v1\nvertices 7\n"
      "cube 2 0 1 2 3\ncube 2 0 1 4 5\ncube 2 0 2 4 6\n");
  auto r = validate_fcc(c);
  EXPECT_FALSE(r.flag_links);
  ASSERT_TRUE(r.non_flag_vertex.has_value());
  EXPECT_EQ(*r.non_flag_vertex, 0u);
  EXPECT_EQ(r.non_flag_clique.size(), 3u);
}

TEST(Validate, FiveByFourNotFoldable) {
  auto r = validate_fcc(torus_grid({5, 4}));
  EXPECT_TRUE(r.no_boundary);
  EXPECT_TRUE(r.flag_links);
  EXPECT_FALSE(r.foldable);
  EXPECT_FALSE(r.is_fcc);
  ASSERT_TRUE(r.fold_failure.has_value());
}

TEST(Validate, Disconnected) {
  auto c = product(cycle(4), cycle(4));
  std::vector<Cube> cubes = c.maximal_cubes();
  for (auto cube : c.maximal_cubes()) {
    for (auto& v : cube.corners) v += 16;
    cubes.push_back(cube);
  }
  auto r = validate_fcc(CubicalComplex::from_cubes(32, cubes));
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.is_fcc);
}

TEST(Validate, NotHomogeneous) {
  auto r = validate_fcc(load_complex("cubical-complex v1\nvertices 5\ncube 2 0 1 2 3\ncube 1 3 4\n"));
  EXPECT_FALSE(r.dimensionally_homogeneous);
}

TEST(Validate, RejectsEmptyAndPoints) {
  EXPECT_FALSE(validate_fcc(CubicalComplex{}).is_fcc);
  EXPECT_FALSE(validate_fcc(load_complex("cubical-complex v1\nvertices 1\n")).is_fcc);
}

TEST(Validate, SuppliedFoldingIsChecked) {
  auto c = torus_grid({4, 4});
  auto f = require_fcc(c);
  EXPECT_TRUE(validate_fcc(c, &f).is_fcc);
  auto bad = f;
  bad.vertex_corner[0] ^= 1u;
  auto r = validate_fcc(c, &bad);
  EXPECT_FALSE(r.foldable);
  EXPECT_FALSE(r.note.empty());
}

TEST(Validate, RequireThrowsNotFcc) {
  try {
    require_fcc(torus_grid({5, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFCC);
  }
}

TEST(Validate, GeneratedComplexesAreFcc) {
  for (const auto& e : corpus::dimension2()) EXPECT_TRUE(validate_fcc(e.complex).is_fcc) << e.name;
  EXPECT_TRUE(validate_fcc(corpus::davis_X(corpus::octahedral_hemispherex())).is_fcc);
  EXPECT_TRUE(validate_fcc(cycle(6)).is_fcc);
}
