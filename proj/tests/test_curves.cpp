#include <gtest/gtest.h>

#include "djc/curves.hpp"
#include <algorithm>
#include <functional>
#include <set>

#include "djc/gensurf.hpp"

using namespace djc;

namespace {

Generated octa() { return generate({SurfaceKind::Octahedron, 0, 0, 0}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

}  // namespace

TEST(Classify, TriangleBoundaryIsSemiCurve) {
  auto g = octa();
  EXPECT_EQ(classify(g.surface, {{0, 2, 3}, true}), CurveClass::SemiCurve);
}

TEST(Classify, EquatorIsDiscrete) {
  auto g = octa();
  EXPECT_EQ(classify(g.surface, g.curves["equator"]), CurveClass::DiscreteCurve);
}

TEST(Classify, OpenTwoEdgePath) {
  auto g = octa();
  Path p{{2, 0, 4}, false};
  EXPECT_EQ(classify(g.surface, p), CurveClass::DiscreteCurve);
  EXPECT_EQ(code_of([&] { check_theorem1_hypotheses(g.surface, p); }), ErrorCode::CurveNotClosed);
  // A path that swallows a cell is only a pseudo-curve.
  EXPECT_EQ(classify(g.surface, {{2, 0, 3, 1}, false}), CurveClass::PseudoCurve);
}

TEST(Classify, Errors) {
  auto g = octa();
  EXPECT_EQ(code_of([&] { classify(g.surface, {{2, 3, 2}, false}); }), ErrorCode::NotSimple);
  EXPECT_EQ(code_of([&] { classify(g.surface, {{0, 1}, false}); }), ErrorCode::EdgeMissing);
}

TEST(Classify, BruteForceAgreesOnOctahedronCycles) {
  auto g = octa();
  const auto& s = g.surface;
  // Every 3- and 4-cycle of the octahedron; a cycle is discrete iff no triangle
  // lies inside its vertex set.
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  for (int len = 3; len <= 4; ++len) {
    std::vector<std::vector<VertexId>> seen;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<VertexId> cyc(perm.begin(), perm.begin() + len);
      bool ok = true;
      for (int i = 0; i < len; ++i) ok &= s.has_edge(cyc[i], cyc[(i + 1) % len]);
      if (!ok) continue;
      bool contains = false;
      for (const auto& cell : s.cells()) {
        bool all = true;
        for (VertexId v : cell) all &= std::find(cyc.begin(), cyc.end(), v) != cyc.end();
        contains |= all;
      }
      auto cls = classify(s, {cyc, true});
      EXPECT_EQ(cls == CurveClass::DiscreteCurve, !contains);
      if (len == 3) EXPECT_EQ(cls, CurveClass::SemiCurve);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(AngleWideness, OctahedronEquatorIsTwo) {
  auto g = octa();
  auto r = angle_wideness(g.surface, g.curves["equator"], 2);
  EXPECT_EQ(r.wideness, 2);
  ASSERT_EQ(r.witness.size(), 3u);
  EXPECT_EQ(r.witness.front(), 5);
  EXPECT_EQ(r.witness.back(), 3);
}

TEST(AngleWideness, WidenessOneMeansCellInside) {
  auto g = octa();
  auto r = angle_wideness(g.surface, {{0, 2, 3}, true}, 2);
  EXPECT_EQ(r.wideness, 1);
}

TEST(AngleWideness, DiscreteCurvesOnDiskRingsAreAtLeastTwo) {
  auto g = generate({SurfaceKind::Disk, 5, 0, 0});
  for (int k = 1; k < 5; ++k) {
    const Path& c = g.curves["ring" + std::to_string(k)];
    if (classify(g.surface, c) != CurveClass::DiscreteCurve) continue;
    for (VertexId x : c.vertices) EXPECT_GE(angle_wideness(g.surface, c, x).wideness, 2);
  }
}

TEST(Hypotheses, OctahedronEquatorFailsWideness) {
  auto g = octa();
  auto r = check_theorem1_hypotheses(g.surface, g.curves["equator"]);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.narrow_angles.size(), 4u);
}

TEST(Hypotheses, BoundaryContact) {
  auto g = generate({SurfaceKind::Disk, 2, 0, 0});
  EXPECT_EQ(code_of([&] { check_theorem1_hypotheses(g.surface, g.curves["rim"]); }),
            ErrorCode::BoundaryContact);
}

TEST(Hypotheses, ShortCutIsReported) {
  // Ring 1 of a hex disk: the hub joins opposite ring vertices in two edges.
  auto g = generate({SurfaceKind::Disk, 3, 0, 0});
  auto r = check_theorem1_hypotheses(g.surface, g.curves["ring1"]);
  EXPECT_FALSE(r.pair_violations.empty());
  for (const auto& v : r.pair_violations) {
    EXPECT_EQ(v.path.front(), v.p);
    EXPECT_EQ(v.path.back(), v.q);
  }
}

TEST(SplitArcs, Examples) {
  Path c{{1, 2, 3, 4}, true};
  auto [a, b] = split_arcs(c, 1, 3);
  EXPECT_EQ(a, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(b, (std::vector<VertexId>{1, 4, 3}));
  auto [x, y] = split_arcs(c, 1, 2);
  EXPECT_EQ(x, (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(y.size(), 4u);
  EXPECT_EQ(code_of([&] { split_arcs(c, 1, 1); }), ErrorCode::EqualEndpoints);
  EXPECT_EQ(code_of([&] { split_arcs(c, 1, 9); }), ErrorCode::VertexNotOnCurve);
}

TEST(SplitArcs, PartitionEdges) {
  Path c{{5, 8, 2, 9, 4, 7}, true};
  for (VertexId p : c.vertices) {
    for (VertexId q : c.vertices) {
      if (p == q) continue;
      auto [a, b] = split_arcs(c, p, q);
      EXPECT_EQ(a.size() + b.size(), c.size() + 2);
      std::set<VertexId> common;
      for (VertexId v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) common.insert(v);
      EXPECT_EQ(common, (std::set<VertexId>{p, q}));
    }
  }
}
