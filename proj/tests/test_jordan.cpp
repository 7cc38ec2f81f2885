#include <gtest/gtest.h>

#include <set>

#include "djc/gensurf.hpp"
#include "djc/jordan.hpp"

using namespace djc;

namespace {

Generated octa() { return generate({SurfaceKind::Octahedron, 0, 0, 0}); }

// Disk in which x1 = 1 has a degree-4 neighbour v = 3 hugging the arc 0, 1, 2.
Surface hug_fixture() {
  // x0=0 x1=1 x2=2 v=3 w=4 o1=5 b3=6 b2=7 b1=8 o2=9
  return Surface::from_cells({{1, 2, 3}, {1, 3, 0}, {1, 0, 6}, {1, 6, 7}, {1, 7, 8}, {1, 8, 2},
                              {3, 2, 4}, {3, 4, 0}, {0, 4, 5}, {0, 5, 6}, {2, 8, 9}, {2, 9, 4}});
}

// Two squares glued along their boundary: a sphere with two 4-gon cells.
Surface two_squares() { return Surface::from_cells({{0, 1, 2, 3}, {3, 2, 1, 0}}); }

}  // namespace

TEST(Veblen, SingleQuadNoCurve) {
  auto s = Surface::from_cells({{0, 1, 2, 3}});
  auto r = insert_veblen_points(s, {{}, true});
  EXPECT_EQ(r.surface.vertex_count(), 4 + 1 + 4);
  EXPECT_EQ(r.surface.cell_count(), 8);
  EXPECT_TRUE(validate(r.surface).empty());
}

TEST(Veblen, OctahedronEquatorCount) {
  auto g = octa();
  auto r = insert_veblen_points(g.surface, g.curves["equator"]);
  EXPECT_EQ(r.surface.vertex_count(), 22);
  EXPECT_TRUE(validate(r.surface).empty());
  EXPECT_TRUE(is_consistently_oriented(r.surface));
  for (const Edge& e : g.curves["equator"].edges()) EXPECT_TRUE(r.surface.has_edge(e.a, e.b));
}

TEST(Veblen, ProvenanceDegrees) {
  auto g = generate({SurfaceKind::Disk, 3, 0, 0});
  const Path& c = g.curves["ring1"];
  auto r = insert_veblen_points(g.surface, c);
  std::set<Edge> curve_edges;
  for (const Edge& e : c.edges()) curve_edges.insert(e);
  for (VertexId v = 0; v < r.surface.vertex_count(); ++v) {
    const auto& p = r.provenance[v];
    if (p.origin == VertexOrigin::VeblenEdge) {
      auto cells = g.surface.cells_of_edge(p.parent_a, p.parent_b);
      EXPECT_EQ(r.surface.neighbors(v).size(), 2 + cells.size());
    } else if (p.origin == VertexOrigin::VeblenFace) {
      auto parent = g.surface.cell(p.parent_a);
      std::set<VertexId> expect;
      for (std::size_t i = 0; i < parent.size(); ++i) {
        VertexId a = parent[i], b = parent[(i + 1) % parent.size()];
        expect.insert(a);
        if (!curve_edges.count(Edge(a, b))) {
          // the edge point is the common neighbour of a, b and this face point
          for (VertexId m : r.surface.neighbors(v))
            if (r.provenance[m].origin == VertexOrigin::VeblenEdge &&
                Edge(r.provenance[m].parent_a, r.provenance[m].parent_b) == Edge(a, b))
              expect.insert(m);
        }
      }
      auto nb = r.surface.neighbors(v);
      EXPECT_EQ(std::set<VertexId>(nb.begin(), nb.end()), expect);
      EXPECT_EQ(nb.size(), parent.size() + parent.size() - [&] {
        std::size_t k = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
          k += curve_edges.count(Edge(parent[i], parent[(i + 1) % parent.size()]));
        return k;
      }());
    }
  }
}

TEST(Veblen, CurveOnBoundaryRejected) {
  auto g = generate({SurfaceKind::Disk, 2, 0, 0});
  try {
    insert_veblen_points(g.surface, g.curves["rim"]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CurveTouchesBoundary);
  }
}

TEST(Components, OctahedronEquator) {
  auto g = octa();
  auto r = components(g.surface, g.curves["equator"]);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0], (std::vector<VertexId>{0}));
  EXPECT_EQ(r.components[1], (std::vector<VertexId>{1}));
  EXPECT_TRUE(r.seeds_separated());
  EXPECT_EQ(r.flank_clockwise.size(), 4u);
  EXPECT_EQ(r.flank_counterclockwise.size(), 4u);
}

TEST(Components, TorusMeridianIsOneComponent) {
  auto g = generate({SurfaceKind::TorusGrid, 4, 4, 0});
  auto r = components(g.surface, g.curves["meridian"]);
  EXPECT_EQ(r.components.size(), 1u);
  EXPECT_FALSE(r.seeds_separated());
}

TEST(Components, Errors) {
  auto g = octa();
  try {
    components(g.surface, {{2, 3, 4}, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CurveNotClosed);
  }
}

TEST(Components, NoEdgeJoinsComponents) {
  auto g = generate({SurfaceKind::Disk, 6, 0, 4});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto c = random_curve(g.surface, seed);
    auto r = components(g.surface, c);
    for (const Edge& e : g.surface.edges()) {
      int a = r.component_of(e.a), b = r.component_of(e.b);
      if (a >= 0 && b >= 0) EXPECT_EQ(a, b);
    }
  }
}

TEST(WideCurve, OctahedronEquatorHypothesesFail) {
  auto g = octa();
  auto r = check_theorem1(g.surface, g.curves["equator"]);
  EXPECT_EQ(r.verdict, Verdict::HypothesesFailed);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_EQ(r.note, "conclusion holds, hypotheses fail");
}

TEST(WideCurve, TorusNote) {
  auto g = generate({SurfaceKind::TorusGrid, 6, 6, 0});
  auto r = check_theorem1(g.surface, g.curves["meridian"]);
  EXPECT_FALSE(r.conclusion_holds);
  EXPECT_NE(r.note.find("not simply connected"), std::string::npos);
}

TEST(VeblenSeparation, SingleCellCurve) {
  auto g = octa();
  Path tri{{0, 2, 3}, true};
  auto r = check_theorem2(g.surface, tri);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  ASSERT_EQ(r.report.components.size(), 2u);
  ASSERT_EQ(r.report.components[0].size(), 1u);
  EXPECT_EQ(r.refined.provenance[r.report.components[0][0]].origin, VertexOrigin::VeblenFace);
  EXPECT_TRUE(r.flanks_separated);
}

TEST(VeblenSeparation, TwoSquaresSphere) {
  auto s = two_squares();
  // The fixture breaks the shared-edge invariant but still separates.
  EXPECT_FALSE(validate(s).empty());
  auto r = check_theorem2(s, {{0, 1, 2, 3}, true});
  EXPECT_EQ(r.verdict, Verdict::Pass);
  ASSERT_EQ(r.report.components.size(), 2u);
  EXPECT_EQ(r.report.components[0].size(), 1u);
  EXPECT_EQ(r.report.components[1].size(), 1u);
  EXPECT_TRUE(r.flanks_separated);
}

TEST(VeblenSeparation, EquatorAndMutation) {
  auto g = octa();
  auto r = check_theorem2(g.surface, g.curves["equator"]);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_TRUE(r.flanks_separated);
  auto m = check_theorem2(g.surface, g.curves["equator"], {true});
  EXPECT_EQ(m.verdict, Verdict::Fail);
  EXPECT_EQ(m.report.components.size(), 1u);
}

TEST(ArcBoundary, InteriorEdgeIsCycle) {
  auto g = octa();
  std::vector<VertexId> x{0, 2};
  auto d = classify_arc_neighborhood_boundary(g.surface, x);
  EXPECT_TRUE(d.cycle_is_simple);
  EXPECT_EQ(d.cycle.size(), 4u);
  EXPECT_TRUE(d.branches.empty());
}

TEST(ArcBoundary, HuggingVertexMakesBranch) {
  auto s = hug_fixture();
  EXPECT_TRUE(validate(s).empty());
  EXPECT_TRUE(is_consistently_oriented(s));
  std::vector<VertexId> x{0, 1, 2};
  auto d = classify_arc_neighborhood_boundary(s, x);
  EXPECT_TRUE(d.cycle_is_simple);
  EXPECT_EQ(d.cycle.size(), 6u);
  ASSERT_EQ(d.branches.size(), 1u);
  EXPECT_EQ(d.branches[0], (std::vector<VertexId>{4, 3}));
}

TEST(ArcBoundary, EmptyArc) {
  auto g = octa();
  try {
    classify_arc_neighborhood_boundary(g.surface, std::vector<VertexId>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnArc);
  }
}
