#include <gtest/gtest.h>

#include <algorithm>

#include "djc/gensurf.hpp"
#include "djc/random.hpp"
#include "djc/variation.hpp"
#include "support/fixtures.hpp"

using namespace djc;
using fixtures::gv;

namespace {

Surface hexagon() {
  std::vector<std::vector<VertexId>> cells;
  for (int i = 0; i < 6; ++i) cells.push_back({0, 1 + i, 1 + (i + 1) % 6});
  return Surface::from_cells(cells);
}

// Exhaustive search over subsets of the candidate cells.
bool subset_oracle(const Surface& s, const Path& a, const Path& b) {
  auto target = xor_sum(a, b);
  std::vector<VertexId> verts = a.vertices;
  verts.insert(verts.end(), b.vertices.begin(), b.vertices.end());
  std::vector<CellId> cand;
  for (CellId c = 0; c < s.cell_count(); ++c) {
    auto cv = s.cell(c);
    if (std::all_of(cv.begin(), cv.end(),
                    [&](VertexId w) { return std::find(verts.begin(), verts.end(), w) != verts.end(); }))
      cand.push_back(c);
  }
  EXPECT_LE(cand.size(), 20u);
  for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
    std::vector<CellId> pick;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (mask >> k & 1) pick.push_back(cand[k]);
    if (boundary_sum(s, pick) == target) return true;
  }
  return false;
}

// Random simple path by self-avoiding walk.
Path random_walk(const Surface& s, Rng& rng, VertexId from, int steps) {
  Path p{{from}, false};
  for (int k = 0; k < steps; ++k) {
    std::vector<VertexId> opts;
    for (VertexId w : s.neighbors(p.vertices.back()))
      if (std::find(p.vertices.begin(), p.vertices.end(), w) == p.vertices.end()) opts.push_back(w);
    if (opts.empty()) break;
    p.vertices.push_back(opts[rng.below(opts.size())]);
  }
  return p;
}

}  // namespace

TEST(XorSum, Laws) {
  Path a{{1, 2, 3}, false}, b{{1, 4, 3}, false}, c{{1, 5, 3}, false};
  EXPECT_TRUE(xor_sum(a, a).empty());
  EXPECT_EQ(xor_sum(a, b), xor_sum(b, a));
  EXPECT_EQ(xor_edges(xor_sum(a, b), c.edges()), xor_edges(a.edges(), xor_sum(b, c)));
  Path d{{7, 8}, false};
  EXPECT_EQ(xor_sum(a, d).size(), 3u);
}

TEST(XorSum, TriangleDetour) {
  Path a{{1, 2}, false}, b{{1, 0, 2}, false};
  EXPECT_EQ(xor_sum(a, b), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(GraduallyVaried, IdenticalAndDetour) {
  auto s = hexagon();
  Path a{{1, 2, 3}, false};
  auto same = is_gradually_varied(s, a, a);
  EXPECT_TRUE(same.varied);
  EXPECT_TRUE(same.witness.empty());
  auto det = is_gradually_varied(s, {{1, 2}, false}, {{1, 0, 2}, false});
  EXPECT_TRUE(det.varied);
  EXPECT_EQ(det.witness, (std::vector<CellId>{0}));
  EXPECT_TRUE(is_side_gradually_varied(s, a, a));
  EXPECT_TRUE(is_side_gradually_varied(s, {{1, 2}, false}, {{1, 0, 2}, false}));
}

TEST(GraduallyVaried, AnnulusRadialPathsAroundHole) {
  auto g = generate({SurfaceKind::Annulus, 8, 0, 0});
  Path a{{0, 4}, false}, b{{0, 3, 2, 6, 5, 4}, false};
  EXPECT_FALSE(is_gradually_varied(g.surface, a, b).varied);
  EXPECT_FALSE(subset_oracle(g.surface, a, b));
  Path c{{0, 1, 5, 4}, false};
  EXPECT_TRUE(is_gradually_varied(g.surface, a, c).varied);
}

TEST(GraduallyVaried, AgreesWithSubsetOracle) {
  auto s = fixtures::grid(3);
  Rng rng(11);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    VertexId from = static_cast<VertexId>(rng.below(s.vertex_count()));
    Path a = random_walk(s, rng, from, 1 + static_cast<int>(rng.below(4)));
    Path b = random_walk(s, rng, from, 1 + static_cast<int>(rng.below(4)));
    if (a.vertices.back() != b.vertices.back()) {
      b.vertices.push_back(a.vertices.back());
      if (!s.has_edge(b.vertices[b.size() - 2], b.vertices.back())) continue;
      auto sorted = b.vertices;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    }
    auto r = is_gradually_varied(s, a, b);
    EXPECT_EQ(r.varied, subset_oracle(s, a, b));
    if (r.varied) {
      ++positives;
      EXPECT_EQ(boundary_sum(s, r.witness), xor_sum(a, b));
    }
  }
  EXPECT_GT(positives, 10);
}

TEST(CrossesOver, GridCrossing) {
  const int n = 5;
  auto s = fixtures::grid(n);
  Path a{{}, false};
  for (int i = 0; i <= n; ++i) a.vertices.push_back(gv(n, i, 2));
  Path b{{gv(n, 2, 0), gv(n, 2, 1), gv(n, 2, 2), gv(n, 3, 2), gv(n, 3, 3), gv(n, 3, 4), gv(n, 3, 5)}, false};
  auto r = crosses_over(s, a, b);
  EXPECT_TRUE(r.crosses);
  ASSERT_EQ(r.sites.size(), 1u);
  EXPECT_EQ(r.sites[0], std::make_pair(gv(n, 2, 2), gv(n, 3, 2)));
  EXPECT_TRUE(crosses_over(s, b, a).crosses);
}

TEST(CrossesOver, TouchingWithoutCrossing) {
  const int n = 5;
  auto s = fixtures::grid(n);
  Path a{{}, false};
  for (int i = 0; i <= n; ++i) a.vertices.push_back(gv(n, i, 2));
  Path b{{gv(n, 2, 0), gv(n, 2, 1), gv(n, 2, 2), gv(n, 1, 1), gv(n, 1, 0)}, false};
  EXPECT_FALSE(crosses_over(s, a, b).crosses);
  Path bounce{{gv(n, 1, 0), gv(n, 2, 1), gv(n, 2, 2), gv(n, 3, 2), gv(n, 3, 1), gv(n, 4, 1), gv(n, 5, 1)}, false};
  EXPECT_FALSE(crosses_over(s, a, bounce).crosses);
  EXPECT_FALSE(crosses_over(s, a, a).crosses);
}

TEST(CrossesOver, BoundaryVertexUsesVirtualClosure) {
  const int n = 4;
  auto s = fixtures::grid(n);
  // a runs along the bottom edge; b comes from inside, touches it and returns.
  Path a{{gv(n, 0, 0), gv(n, 1, 0), gv(n, 2, 0), gv(n, 3, 0)}, false};
  Path b{{gv(n, 1, 1), gv(n, 1, 0), gv(n, 2, 1)}, false};
  EXPECT_FALSE(crosses_over(s, a, b).crosses);
}

TEST(SideGraduallyVaried, CrossingPairInHexagon) {
  auto s = hexagon();
  Path a{{1, 0, 4}, false}, b{{1, 2, 0, 5, 4}, false};
  EXPECT_TRUE(is_gradually_varied(s, a, b).varied);
  EXPECT_TRUE(crosses_over(s, a, b).crosses);
  EXPECT_FALSE(is_side_gradually_varied(s, a, b));
  Path c{{1, 2, 0, 4}, false};
  EXPECT_TRUE(is_side_gradually_varied(s, a, c));
}

TEST(SideGraduallyVaried, WitnessCellsOrientAlongPaths) {
  // Non-crossing varied pairs: each witness cell, possibly reversed, runs along
  // a's edges with a and against b's edges.
  const int n = 3;
  auto s = fixtures::grid(n);
  Path a{{gv(n, 0, 0), gv(n, 1, 0), gv(n, 2, 0), gv(n, 3, 0)}, false};
  Path b{{gv(n, 0, 0), gv(n, 0, 1), gv(n, 1, 1), gv(n, 2, 1), gv(n, 3, 1), gv(n, 3, 0)}, false};
  ASSERT_TRUE(is_side_gradually_varied(s, a, b));
  auto w = is_gradually_varied(s, a, b).witness;
  ASSERT_FALSE(w.empty());
  auto directed = [](const Path& p) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p.vertices[i], p.vertices[i + 1]);
    return out;
  };
  for (CellId c : w) {
    bool ok_fwd = true, ok_rev = true;
    for (auto [u, v] : directed(a)) {
      if (!s.cells_of_edge(u, v).empty() && std::count(s.cells_of_edge(u, v).begin(), s.cells_of_edge(u, v).end(), c)) {
        ok_fwd &= s.traverses(c, u, v);
        ok_rev &= s.traverses(c, v, u);
      }
    }
    for (auto [u, v] : directed(b)) {
      if (std::count(s.cells_of_edge(u, v).begin(), s.cells_of_edge(u, v).end(), c)) {
        ok_fwd &= s.traverses(c, v, u);
        ok_rev &= s.traverses(c, u, v);
      }
    }
    EXPECT_TRUE(ok_fwd || ok_rev) << "cell " << c;
  }
}
