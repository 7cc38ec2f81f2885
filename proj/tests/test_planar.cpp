#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "djc/jordan.hpp"
#include "djc/planar.hpp"

using namespace djc;

namespace {

Point2 ptq(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }
Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

BBox box(long x0, long y0, long x1, long y1) { return {pt(x0, y0), pt(x1, y1)}; }

int count_origin(const EmbeddedComplex& ec, VertexOrigin o) {
  return static_cast<int>(std::count_if(ec.provenance.begin(), ec.provenance.end(),
                                        [&](const Provenance& p) { return p.origin == o; }));
}

// Distinct points where the closed polygon meets the lattice's edges and
// vertices, computed on the untouched lattice.
std::set<Point2> sweep_points(const EmbeddedComplex& lat, const std::vector<Point2>& poly) {
  std::set<Point2> hits(poly.begin(), poly.end());
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point2& a = poly[k];
    const Point2& b = poly[(k + 1) % poly.size()];
    for (const Point2& p : lat.coords)
      if (on_segment(p, a, b)) hits.insert(p);
    for (const Edge& e : lat.surface.edges()) {
      Point2 at;
      if (proper_intersection(a, b, lat.coords[e.a], lat.coords[e.b], &at)) hits.insert(at);
    }
  }
  return hits;
}

bool strictly_inside_convex(const std::vector<Point2>& ccw, const Point2& p) {
  for (std::size_t i = 0; i < ccw.size(); ++i)
    if (orientation(ccw[i], ccw[(i + 1) % ccw.size()], p) <= 0) return false;
  return true;
}

std::vector<Point2> square(long lo, long hi) { return {pt(lo, lo), pt(hi, lo), pt(hi, hi), pt(lo, hi)}; }

}  // namespace

TEST(Rational, ParsesExactly) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("3e-2"), Rational(3, 100));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(-4, 2)), "-2");
  for (const char* bad : {"", "x", "1/0", "1/", ".", "1e", "--1", "1.2.3"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse);
    }
  }
}

TEST(Rational, Predicates) {
  EXPECT_EQ(orientation(pt(0, 0), pt(1, 0), pt(0, 1)), 1);
  EXPECT_TRUE(strictly_inside_segment(ptq("1/3", "1/3"), pt(0, 0), pt(1, 1)));
  EXPECT_FALSE(strictly_inside_segment(pt(1, 1), pt(0, 0), pt(1, 1)));
  Point2 at;
  ASSERT_TRUE(proper_intersection(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0), &at));
  EXPECT_EQ(at, pt(1, 1));
  EXPECT_FALSE(proper_intersection(pt(0, 0), pt(2, 2), pt(1, 1), pt(2, 0), nullptr));
  EXPECT_TRUE(segments_touch(pt(0, 0), pt(2, 2), pt(1, 1), pt(2, 0)));
}

TEST(Lattice, UnitBoxCovered) {
  auto ec = lattice(Rational(1), box(0, 0, 1, 1));
  EXPECT_GE(ec.surface.cell_count(), 2);
  EXPECT_TRUE(check_embedding(ec).empty());
}

TEST(Lattice, TenByTenCount) {
  auto ec = lattice(Rational(1), box(0, 0, 10, 10));
  // rows 0..10, 12 points per row, 2 * 11 triangles per strip
  EXPECT_EQ(ec.surface.cell_count(), 2 * 11 * 10);
  EXPECT_GE(ec.surface.cell_count(), 200);
  EXPECT_LE(ec.surface.cell_count(), 2 * 11 * 12);
  EXPECT_TRUE(validate(ec.surface).empty());
  EXPECT_TRUE(check_embedding(ec).empty());
  EXPECT_EQ(ec.surface.euler_characteristic(), 1);
}

TEST(Lattice, Errors) {
  try {
    lattice(Rational(1), box(0, 0, 0, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateBBox);
  }
  EXPECT_THROW(lattice(Rational(0), box(0, 0, 1, 1)), Error);
}

TEST(Polygon, Simplicity) {
  EXPECT_TRUE(is_simple_polygon(square(0, 2)));
  EXPECT_FALSE(is_simple_polygon({pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)}));
  EXPECT_FALSE(is_simple_polygon({pt(0, 0), pt(2, 0), pt(1, 0)}));
  EXPECT_FALSE(is_simple_polygon({pt(0, 0), pt(1, 0)}));
  EXPECT_FALSE(is_simple_polygon({pt(0, 0), pt(2, 0), pt(2, 2), pt(2, 0)}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_simple_polygon(seed, 3, 12, 5);
    EXPECT_TRUE(is_simple_polygon(p));
    EXPECT_EQ(p, random_simple_polygon(seed, 3, 12, 5));
  }
}

TEST(Embed, VertexInsideTriangleSplitsIntoThree) {
  auto lat = lattice(Rational(1), box(0, 0, 12, 12));
  std::vector<Point2> tri{ptq("3.2", "3.1"), ptq("8.3", "3.2"), ptq("5.1", "8.4")};
  // Oracle: the lattice triangle holding the first vertex, by brute force.
  std::vector<VertexId> holder;
  for (CellId c = 0; c < lat.surface.cell_count(); ++c) {
    std::vector<Point2> ring;
    for (VertexId v : lat.surface.cell(c)) ring.push_back(lat.coords[v]);
    if (strictly_inside_convex(ring, tri[0])) holder.assign(lat.surface.cell(c).begin(), lat.surface.cell(c).end());
  }
  ASSERT_EQ(holder.size(), 3u);
  auto r = embed_polygon(lat, tri);
  VertexId corner = -1;
  for (VertexId v = 0; v < r.complex.surface.vertex_count(); ++v)
    if (r.complex.coords[v] == tri[0]) corner = v;
  ASSERT_GE(corner, 0);
  EXPECT_EQ(r.complex.provenance[corner].origin, VertexOrigin::Original);
  auto nb = r.complex.surface.neighbors(corner);
  for (VertexId h : holder) EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), h));
  const int added = r.complex.surface.vertex_count() - lat.surface.vertex_count();
  EXPECT_EQ(r.complex.surface.cell_count(), lat.surface.cell_count() + 2 * added);
  EXPECT_TRUE(validate(r.complex.surface).empty());
  EXPECT_TRUE(check_embedding(r.complex, 0).empty());
}

TEST(Embed, VertexOnEdgeSplitsTwoTriangles) {
  auto lat = lattice(Rational(1), box(0, 0, 12, 12));
  // (4.5, 3) lies inside the horizontal lattice edge (4,3)-(5,3)? Row 3 is odd,
  // so its points sit at x = i + 1/2; (5, 3) is then interior to (4.5,3)-(5.5,3).
  std::vector<Point2> tri{pt(5, 3), pt(9, 4), pt(6, 9)};
  auto r = embed_polygon(lat, tri);
  VertexId corner = -1;
  for (VertexId v = lat.surface.vertex_count(); v < r.complex.surface.vertex_count(); ++v)
    if (r.complex.coords[v] == tri[0]) corner = v;
  ASSERT_GE(corner, 0);
  std::set<Point2> nb;
  for (VertexId v : r.complex.surface.neighbors(corner)) nb.insert(r.complex.coords[v]);
  EXPECT_TRUE(nb.count(ptq("4.5", "3")));
  EXPECT_TRUE(nb.count(ptq("5.5", "3")));
  EXPECT_TRUE(nb.count(pt(5, 2)));
  EXPECT_TRUE(nb.count(pt(5, 4)));
  EXPECT_TRUE(check_embedding(r.complex, 0).empty());
}

TEST(Embed, SquareMatchesSweepOracle) {
  auto lat = lattice(Rational(1, 3), box(-6, -6, 10, 10));
  auto sq = square(0, 4);
  auto r = embed_polygon(lat, sq);
  EXPECT_EQ(r.curve.size(), sweep_points(lat, sq).size());
  EXPECT_TRUE(r.curve.closed);
  EXPECT_EQ(classify(r.complex.surface, r.curve), CurveClass::DiscreteCurve);
  for (VertexId v : r.curve.vertices) {
    bool on = false;
    for (std::size_t k = 0; k < sq.size(); ++k) on = on || on_segment(r.complex.coords[v], sq[k], sq[(k + 1) % 4]);
    EXPECT_TRUE(on);
  }
  EXPECT_EQ(count_origin(r.complex, VertexOrigin::Original), 4);
}

TEST(Embed, MeasureStrictlyDecreases) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto poly = random_simple_polygon(seed, 3, 12, 5);
    auto cfg = resolve_config(poly, {});
    auto lat = lattice(*cfg.edge_length, embedding_bbox(poly, *cfg.margin));
    auto r = embed_polygon(lat, poly);
    ASSERT_FALSE(r.measure_history.empty());
    EXPECT_EQ(r.measure_history.back(), 0);
    for (std::size_t i = 1; i < r.measure_history.size(); ++i)
      EXPECT_LT(r.measure_history[i], r.measure_history[i - 1]);
    // Where two polygon edges pass through one lattice triangle, an edge made
    // by an earlier split can be crossed again; such points hang off new vertices.
    auto hits = sweep_points(lat, poly);
    std::set<Point2> on_curve;
    for (VertexId v : r.curve.vertices) {
      on_curve.insert(r.complex.coords[v]);
      if (hits.count(r.complex.coords[v])) continue;
      const Provenance& pv = r.complex.provenance[v];
      EXPECT_EQ(pv.origin, VertexOrigin::SnapPoint);
      EXPECT_TRUE(std::max(pv.parent_a, pv.parent_b) >= lat.surface.vertex_count()) << seed;
    }
    for (const Point2& h : hits) EXPECT_TRUE(on_curve.count(h)) << seed;
    EXPECT_TRUE(validate(r.complex.surface).empty());
    EXPECT_TRUE(check_embedding(r.complex, 0).empty());
  }
}

TEST(Embed, Errors) {
  auto lat = lattice(Rational(1), box(0, 0, 12, 12));
  try {
    embed_polygon(lat, {pt(2, 2), pt(8, 8), pt(8, 2), pt(2, 8)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimplePolygon);
  }
  try {
    embed_polygon(lat, {ptq("3.1", "3.1"), ptq("3.3", "3.1"), pt(8, 8)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LatticeTooCoarse);
  }
  try {
    EmbedConfig cfg;
    cfg.edge_length = Rational(1);
    resolve_config(square(0, 2), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LatticeTooCoarse);
  }
  EmbedConfig ok;
  ok.edge_length = Rational(2, 3);
  EXPECT_NO_THROW(resolve_config(square(0, 2), ok));
}

TEST(Embed, DefaultConfigRespectsBounds) {
  auto poly = random_simple_polygon(4, 3, 12, 5);
  auto cfg = resolve_config(poly, {});
  EXPECT_LE(9 * *cfg.edge_length * *cfg.edge_length, min_vertex_distance_sq(poly));
  EXPECT_GT(*cfg.margin * *cfg.margin, diameter_sq(poly));
}

TEST(Widen, CountsAndCurvePreserved) {
  EmbeddedComplex tri;
  tri.coords = {pt(0, 0), pt(3, 0), pt(0, 3)};
  tri.provenance.assign(3, {});
  tri.surface = Surface(3, {{0, 1, 2}});
  auto w = widen_angles(tri, 1);
  EXPECT_EQ(w.surface.cell_count(), 3);
  EXPECT_EQ(w.coords[3], pt(1, 1));
  EXPECT_EQ(w.provenance[3].origin, VertexOrigin::VeblenFace);

  auto r = embed_polygon(lattice(Rational(1, 3), box(-6, -6, 10, 10)), square(0, 4));
  for (int rounds = 0; rounds <= 2; ++rounds) {
    auto wr = widen_angles(r.complex, rounds);
    int expect = r.complex.surface.cell_count();
    for (int i = 0; i < rounds; ++i) expect *= 3;
    EXPECT_EQ(wr.surface.cell_count(), expect);
    for (const Edge& e : r.curve.edges()) EXPECT_TRUE(wr.surface.has_edge(e.a, e.b));
    for (int v = 0; v < r.complex.surface.vertex_count(); ++v) EXPECT_EQ(wr.coords[v], r.complex.coords[v]);
    if (rounds == 2) {
      EXPECT_TRUE(check_embedding(wr, 0).empty());
      for (VertexId x : r.curve.vertices) EXPECT_GE(angle_wideness(wr.surface, r.curve, x).wideness, 3);
    }
  }
}

TEST(Widen, IsolatedSquarePassesTheorem1) {
  auto r = embed(square(0, 4));
  auto hyp = check_theorem1_hypotheses(r.complex.surface, r.curve);
  EXPECT_TRUE(hyp.ok());
  auto t1 = check_theorem1(r.complex.surface, r.curve);
  EXPECT_EQ(t1.verdict, Verdict::Pass);
  EXPECT_GE(t1.report.components.size(), 2u);
  EXPECT_TRUE(t1.report.seeds_separated());
  EXPECT_TRUE(validate(r.complex.surface).empty());
  EXPECT_TRUE(check_embedding(r.complex, 0).empty());
}

TEST(Widen, RandomPolygonsPassTheorem1) {
  for (std::uint64_t seed = 100; seed < 106; ++seed) {
    auto r = embed(random_simple_polygon(seed, 3, 12, 5));
    auto t1 = check_theorem1(r.complex.surface, r.curve);
    EXPECT_EQ(t1.verdict, Verdict::Pass) << seed << " " << t1.note;
  }
}

TEST(InsideOutside, AgreesWithComponents) {
  std::vector<Point2> hexagon{pt(2, 0), pt(4, 0), pt(6, 2), pt(4, 4), pt(2, 4), pt(0, 2)};
  auto r = embed(hexagon);
  auto report = components(r.complex.surface, r.curve);
  ASSERT_EQ(report.components.size(), 2u);
  std::map<int, std::set<Side>> labels;
  for (VertexId v = 0; v < r.complex.surface.vertex_count(); ++v) {
    const Side side = inside_outside(r.complex, r.curve, v);
    if (index_of(r.curve, v) >= 0) {
      EXPECT_EQ(side, Side::OnCurve);
      continue;
    }
    // convexity oracle, independent of ray casting
    EXPECT_EQ(side == Side::Inside, strictly_inside_convex(hexagon, r.complex.coords[v]));
    labels[report.component_of(v)].insert(side);
  }
  ASSERT_EQ(labels.size(), 2u);
  for (auto& [comp, sides] : labels) EXPECT_EQ(sides.size(), 1u);
  EXPECT_NE(*labels[0].begin(), *labels[1].begin());
  // a centroid inside the polygon
  for (VertexId v = 0; v < r.complex.surface.vertex_count(); ++v) {
    if (r.complex.provenance[v].origin == VertexOrigin::VeblenFace && r.complex.coords[v] == pt(3, 2)) {
      EXPECT_EQ(inside_outside(r.complex, r.curve, v), Side::Inside);
    }
  }
  EXPECT_EQ(inside_outside(r.complex, r.curve, 0), Side::Outside);
}

TEST(Midpoint, SingleTriangleNoCurve) {
  EmbeddedComplex tri;
  tri.coords = {pt(0, 0), pt(4, 0), pt(0, 4)};
  tri.provenance.assign(3, {});
  tri.surface = Surface(3, {{0, 1, 2}});
  auto s = midpoint_subdivide(tri, {}, 1);
  ASSERT_EQ(s.complex.surface.cell_count(), 4);
  std::multiset<Rational> sides0;
  for (CellId c = 0; c < 4; ++c) {
    auto cell = s.complex.surface.cell(c);
    std::multiset<Rational> sides;
    for (int i = 0; i < 3; ++i) sides.insert(squared_distance(s.complex.coords[cell[i]], s.complex.coords[cell[(i + 1) % 3]]));
    if (c == 0) sides0 = sides;
    EXPECT_EQ(sides, sides0);
  }
  EXPECT_EQ(sides0, (std::multiset<Rational>{Rational(4), Rational(4), Rational(8)}));
  EXPECT_TRUE(s.boundary_path.vertices.empty());
}

TEST(Midpoint, StraightCurveUsesGeometricMidpoint) {
  EmbeddedComplex tri;
  tri.coords = {pt(0, 0), pt(4, 0), pt(0, 4)};
  tri.provenance.assign(3, {});
  tri.surface = Surface(3, {{0, 1, 2}});
  auto s = midpoint_subdivide(tri, {{pt(0, 0), pt(4, 0)}, false}, 2);
  ASSERT_EQ(s.boundary_path.vertices.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(s.complex.coords[s.boundary_path.vertices[i]], pt(static_cast<long>(i), 0));
}

TEST(Midpoint, CircleThreeLevels) {
  auto ring = circle_polygon(64, Rational(100));
  for (auto& p : ring) EXPECT_EQ(p.x * p.x + p.y * p.y, Rational(10000));
  auto fan = fan_triangulation(ring, pt(0, 0));
  PolylineCurve curve{ring, true};
  auto before = midpoint_subdivide(fan, curve, 0);
  ASSERT_EQ(before.boundary_path.vertices.size(), 64u);
  auto s = midpoint_subdivide(fan, curve, 3);
  EXPECT_EQ(s.boundary_path.vertices.size(), 64u * 8);
  for (VertexId v : s.boundary_path.vertices) {
    bool on = false;
    for (int k = 0; k < 64 && !on; ++k) on = on_segment(s.complex.coords[v], ring[k], ring[(k + 1) % 64]);
    EXPECT_TRUE(on);
  }
  EXPECT_LE(max_edge_length_sq(s.complex, s.boundary_path) * 64, max_edge_length_sq(fan, before.boundary_path));
  EXPECT_EQ(s.complex.surface.cell_count(), 64 * 64);
  EXPECT_TRUE(check_embedding(s.complex, 0).empty());
}

TEST(Midpoint, CoarseFanRelocatesOntoPolygonVertices) {
  auto ring = circle_polygon(64, Rational(100));
  std::vector<Point2> octagon;
  for (int k = 0; k < 64; k += 8) octagon.push_back(ring[k]);
  auto fan = fan_triangulation(octagon, pt(0, 0));
  auto s = midpoint_subdivide(fan, {ring, true}, 3);
  ASSERT_EQ(s.boundary_path.vertices.size(), 64u);
  for (int k = 0; k < 64; ++k) EXPECT_EQ(s.complex.coords[s.boundary_path.vertices[k]], ring[k]);
  EXPECT_TRUE(check_embedding(s.complex, 0).empty());
}

TEST(Midpoint, Errors) {
  EmbeddedComplex tri;
  tri.coords = {pt(0, 0), pt(4, 0), pt(0, 4)};
  tri.provenance.assign(3, {});
  tri.surface = Surface(3, {{0, 1, 2}});
  try {
    midpoint_subdivide(tri, {{pt(0, 0), pt(4, 0), pt(0, 4)}, false}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CurveTriangleMultiCross);
  }
  EmbeddedComplex flat;
  flat.coords = {pt(0, 0), pt(4, 0), pt(2, 1), pt(2, -1)};
  flat.provenance.assign(4, {});
  flat.surface = Surface(4, {{0, 1, 2}, {1, 0, 3}});
  // the arc midpoint (2, 5) lies beyond the opposite vertex (2, 1)
  try {
    midpoint_subdivide(flat, {{pt(0, 0), pt(2, 5), pt(4, 0)}, false}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvertedCell);
  }
  try {
    midpoint_subdivide(flat, {{pt(2, 1), pt(2, -1)}, false}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EdgeMissing);
  }
}

TEST(CheckEmbedding, DetectsOverlapAndDuplicates) {
  EmbeddedComplex ec;
  ec.coords = {pt(0, 0), pt(4, 0), pt(0, 4), pt(1, 1), pt(5, 1), pt(1, 5)};
  ec.provenance.assign(6, {});
  ec.surface = Surface(6, {{0, 1, 2}, {3, 4, 5}});
  auto v = check_embedding(ec);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("overlap"), std::string::npos);
  ec.coords[5] = pt(0, 4);
  EXPECT_FALSE(check_embedding(ec).empty());
}
