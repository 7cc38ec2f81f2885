#include <gtest/gtest.h>

#include "djc/gensurf.hpp"

using namespace djc;

TEST(Generate, OctahedronCounts) {
  auto g = generate({SurfaceKind::Octahedron, 0, 0, 0});
  EXPECT_EQ(g.surface.vertex_count(), 6);
  EXPECT_EQ(g.surface.cell_count(), 8);
  EXPECT_EQ(g.surface.edge_count(), 12);
  EXPECT_EQ(g.surface.euler_characteristic(), 2);
}

TEST(Generate, EulerCharacteristicByKind) {
  struct Case {
    GenSpec spec;
    int chi;
  };
  std::vector<Case> cases = {
      {{SurfaceKind::Octahedron, 0, 0, 3}, 2},  {{SurfaceKind::Icosahedron, 0, 0, 1}, 2},
      {{SurfaceKind::Disk, 4, 0, 2}, 1},        {{SurfaceKind::Fan, 7, 0, 0}, 1},
      {{SurfaceKind::TorusGrid, 4, 4, 0}, 0},   {{SurfaceKind::TorusGrid, 3, 5, 9}, 0},
      {{SurfaceKind::Annulus, 8, 0, 0}, 0},     {{SurfaceKind::Moebius, 0, 0, 0}, 0},
  };
  for (const auto& c : cases) {
    auto g = generate(c.spec);
    EXPECT_TRUE(validate(g.surface).empty()) << to_string(c.spec.kind);
    EXPECT_EQ(g.surface.euler_characteristic(), c.chi) << to_string(c.spec.kind);
    if (c.spec.kind != SurfaceKind::Moebius) {
      EXPECT_TRUE(is_consistently_oriented(g.surface)) << to_string(c.spec.kind);
    }
  }
}

TEST(Generate, DiskSizes) {
  for (int r = 1; r <= 6; ++r) {
    auto g = generate({SurfaceKind::Disk, r, 0, 0});
    EXPECT_EQ(g.surface.cell_count(), 6 * r * r);
    EXPECT_EQ(g.curves["rim"].size(), static_cast<std::size_t>(6 * r));
  }
}

TEST(Generate, MoebiusIsNonOrientable) {
  auto g = generate({SurfaceKind::Moebius, 0, 0, 0});
  try {
    orient(g.surface);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonOrientable);
  }
}

TEST(Generate, BadParameters) {
  EXPECT_THROW(generate({SurfaceKind::Disk, 51, 0, 0}), Error);
  EXPECT_THROW(generate({SurfaceKind::TorusGrid, 2, 4, 0}), Error);
  EXPECT_THROW(generate({SurfaceKind::Annulus, 7, 0, 0}), Error);
  EXPECT_THROW(parse_kind("klein"), Error);
}

TEST(Generate, Reproducible) {
  GenSpec spec{SurfaceKind::Disk, 5, 0, 77};
  EXPECT_EQ(generate(spec).surface.cells(), generate(spec).surface.cells());
  GenSpec other = spec;
  other.seed = 78;
  EXPECT_NE(generate(spec).surface.cells(), generate(other).surface.cells());
}

TEST(RandomCurve, SameSeedSameCurve) {
  auto g = generate({SurfaceKind::Disk, 6, 0, 0});
  auto a = random_curve(g.surface, 5);
  auto b = random_curve(g.surface, 5);
  EXPECT_EQ(a, b);
  EXPECT_EQ(classify(g.surface, a), CurveClass::DiscreteCurve);
  for (VertexId v : a.vertices) EXPECT_FALSE(g.surface.is_boundary_vertex(v));
}

TEST(RandomCurve, OctahedronShortCurvesAreEquators) {
  auto g = generate({SurfaceKind::Octahedron, 0, 0, 0});
  const auto& s = g.surface;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = random_curve(s, seed, {3, 4, 2000});
    ASSERT_EQ(c.size(), 4u);
    // An equator misses exactly one antipodal pair, and those two are not adjacent.
    std::vector<VertexId> missing;
    for (VertexId v = 0; v < 6; ++v)
      if (std::find(c.vertices.begin(), c.vertices.end(), v) == c.vertices.end()) missing.push_back(v);
    ASSERT_EQ(missing.size(), 2u);
    EXPECT_FALSE(s.has_edge(missing[0], missing[1]));
  }
}

TEST(RandomCurve, FanThreeHasNoInteriorCurve) {
  auto g = generate({SurfaceKind::Fan, 3, 0, 0});
  try {
    random_curve(g.surface, 1, {3, 100, 50});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExhausted);
  }
}
