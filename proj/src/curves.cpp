#include "djc/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace djc {

std::size_t Path::edge_count() const {
  if (vertices.size() < 2) return 0;
  return closed ? vertices.size() : vertices.size() - 1;
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i + 1 < n; ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  if (closed && n > 2) out.emplace_back(vertices[n - 1], vertices[0]);
  return out;
}

std::string_view to_string(CurveClass c) {
  switch (c) {
    case CurveClass::PseudoCurve: return "PseudoCurve";
    case CurveClass::SemiCurve: return "SemiCurve";
    case CurveClass::DiscreteCurve: return "DiscreteCurve";
  }
  return "Unknown";
}

int index_of(const Path& path, VertexId v) {
  auto it = std::find(path.vertices.begin(), path.vertices.end(), v);
  return it == path.vertices.end() ? -1 : static_cast<int>(it - path.vertices.begin());
}

void require_simple_path(const Surface& surface, const Path& path) {
  for (VertexId v : path.vertices) surface.require_vertex(v);
  std::vector<VertexId> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::NotSimple, "path repeats a vertex");
  }
  if (path.closed && path.vertices.size() < 3) {
    throw Error(ErrorCode::NotSimple, "closed path needs at least 3 vertices");
  }
  for (const Edge& e : path.edges()) {
    if (!surface.has_edge(e.a, e.b)) {
      throw Error(ErrorCode::EdgeMissing,
                  "no edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
    }
  }
}

CurveClass classify(const Surface& surface, const Path& path) {
  require_simple_path(surface, path);
  std::vector<VertexId> mine = path.vertices;
  std::sort(mine.begin(), mine.end());
  std::set<CellId> seen;
  bool contains_cell = false;
  bool is_cell_boundary = false;
  for (VertexId v : path.vertices) {
    for (CellId c : surface.cells_of_vertex(v)) {
      if (!seen.insert(c).second) continue;
      auto cv = surface.cell(c);
      bool inside = std::all_of(cv.begin(), cv.end(), [&](VertexId w) {
        return std::binary_search(mine.begin(), mine.end(), w);
      });
      if (!inside) continue;
      contains_cell = true;
      if (path.closed && cv.size() == path.vertices.size() &&
          canonical_cycle_undirected(cv) == canonical_cycle_undirected(path.vertices)) {
        is_cell_boundary = true;
      }
    }
  }
  if (!contains_cell) return CurveClass::DiscreteCurve;
  return is_cell_boundary ? CurveClass::SemiCurve : CurveClass::PseudoCurve;
}

namespace {

// Curve neighbours of the vertex at index i.
std::pair<VertexId, VertexId> curve_neighbors(const Path& curve, int i) {
  const int n = static_cast<int>(curve.vertices.size());
  if (!curve.closed && (i == 0 || i == n - 1)) {
    throw Error(ErrorCode::VertexNotOnCurve, "angle vertex is a path endpoint");
  }
  return {curve.vertices[(i - 1 + n) % n], curve.vertices[(i + 1) % n]};
}

}  // namespace

AngleReport angle_wideness(const Surface& surface, const Path& curve, VertexId x0) {
  const int i = index_of(curve, x0);
  if (i < 0) throw Error(ErrorCode::VertexNotOnCurve, "vertex " + std::to_string(x0));
  auto [from, to] = curve_neighbors(curve, i);

  std::map<VertexId, std::vector<VertexId>> adj;
  for (CellId c : surface.cells_of_vertex(x0)) {
    auto cv = surface.cell(c);
    for (std::size_t k = 0; k < cv.size(); ++k) {
      VertexId u = cv[k];
      VertexId v = cv[(k + 1) % cv.size()];
      if (u == x0 || v == x0) continue;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  for (auto& [v, list] : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::map<VertexId, VertexId> parent{{from, from}};
  std::deque<VertexId> queue{from};
  while (!queue.empty() && !parent.count(to)) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adj[u]) {
      if (parent.emplace(w, u).second) queue.push_back(w);
    }
  }
  if (!parent.count(to)) {
    throw Error(ErrorCode::NoDetour, "no detour around vertex " + std::to_string(x0));
  }
  AngleReport report;
  report.x0 = x0;
  for (VertexId v = to; v != from; v = parent[v]) report.witness.push_back(v);
  report.witness.push_back(from);
  std::reverse(report.witness.begin(), report.witness.end());
  report.wideness = static_cast<int>(report.witness.size()) - 1;
  return report;
}

namespace {

// True iff three of the edges can be assigned three distinct cells.
bool has_three_distinct_cells(const std::vector<std::span<const CellId>>& cells) {
  const std::size_t n = cells.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (CellId x : cells[a])
          for (CellId y : cells[b]) {
            if (y == x) continue;
            for (CellId z : cells[c])
              if (z != x && z != y) return true;
          }
  return false;
}

struct PairSearch {
  const Surface& surface;
  const Path& curve;
  std::vector<int> position;  // index on the curve, -1 off it
  int radius;
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> violations;

  std::vector<VertexId> path;
  std::vector<std::span<const CellId>> edge_cells;

  bool adjacent_on_curve(VertexId p, VertexId q) const {
    const int n = static_cast<int>(curve.vertices.size());
    int d = std::abs(position[p] - position[q]);
    return d == 1 || d == n - 1;
  }

  void extend() {
    VertexId u = path.back();
    for (VertexId w : surface.neighbors(u)) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      const bool on_curve = position[w] >= 0;
      if (on_curve && position[u] >= 0) continue;  // curve edge or chord from the start
      path.push_back(w);
      edge_cells.push_back(surface.cells_of_edge(u, w));
      const bool spread = has_three_distinct_cells(edge_cells);
      if (on_curve) {
        VertexId p = path.front();
        if (!spread && p < w && !adjacent_on_curve(p, w)) violations.emplace(std::pair{p, w}, path);
      } else if (!spread && static_cast<int>(edge_cells.size()) < radius) {
        extend();
      }
      path.pop_back();
      edge_cells.pop_back();
    }
  }
};

}  // namespace

HypothesisReport check_theorem1_hypotheses(const Surface& surface, const Path& curve,
                                           const HypothesisOptions& options) {
  if (!curve.closed) throw Error(ErrorCode::CurveNotClosed, "separation check needs a closed curve");
  require_simple_path(surface, curve);
  for (VertexId v : curve.vertices) {
    if (surface.is_boundary_vertex(v)) {
      throw Error(ErrorCode::BoundaryContact, "curve vertex " + std::to_string(v) + " lies on the boundary");
    }
  }
  HypothesisReport report;
  report.discrete = classify(surface, curve) == CurveClass::DiscreteCurve;
  for (VertexId x : curve.vertices) {
    AngleReport a = angle_wideness(surface, curve, x);
    if (a.wideness < 3) report.narrow_angles.push_back(std::move(a));
  }

  PairSearch search{surface, curve, std::vector<int>(surface.vertex_count(), -1), options.radius, {}, {}, {}};
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) search.position[curve.vertices[i]] = static_cast<int>(i);
  // Chords between nonadjacent curve vertices are one-edge off-curve paths.
  for (VertexId p : curve.vertices) {
    for (VertexId q : surface.neighbors(p)) {
      if (p < q && search.position[q] >= 0 && !search.adjacent_on_curve(p, q)) {
        search.violations.emplace(std::pair{p, q}, std::vector<VertexId>{p, q});
      }
    }
  }
  for (VertexId p : curve.vertices) {
    search.path = {p};
    search.edge_cells.clear();
    search.extend();
  }
  for (auto& [pq, path] : search.violations) {
    report.pair_violations.push_back({pq.first, pq.second, std::move(path)});
  }
  return report;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> split_arcs(const Path& curve, VertexId p,
                                                                   VertexId q) {
  if (!curve.closed) throw Error(ErrorCode::CurveNotClosed, "split_arcs needs a closed curve");
  const int i = index_of(curve, p);
  const int j = index_of(curve, q);
  if (i < 0) throw Error(ErrorCode::VertexNotOnCurve, "vertex " + std::to_string(p));
  if (j < 0) throw Error(ErrorCode::VertexNotOnCurve, "vertex " + std::to_string(q));
  if (i == j) throw Error(ErrorCode::EqualEndpoints, "p = q = " + std::to_string(p));
  const int n = static_cast<int>(curve.vertices.size());
  std::vector<VertexId> along, against;
  for (int k = i;; k = (k + 1) % n) {
    along.push_back(curve.vertices[k]);
    if (k == j) break;
  }
  for (int k = i;; k = (k - 1 + n) % n) {
    against.push_back(curve.vertices[k]);
    if (k == j) break;
  }
  return {along, against};
}

}  // namespace djc
