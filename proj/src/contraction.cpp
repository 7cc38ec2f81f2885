#include "djc/contraction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "djc/gensurf.hpp"
#include "djc/random.hpp"
#include "djc/variation.hpp"

namespace djc {

std::vector<int> graph_distances(const Surface& surface, const std::vector<char>& cells,
                                 const std::vector<VertexId>& sources) {
  for (VertexId s : sources) surface.require_vertex(s);
  auto usable = [&](VertexId u, VertexId w) {
    if (cells.empty()) return true;
    for (CellId c : surface.cells_of_edge(u, w))
      if (cells[c]) return true;
    return false;
  };
  std::vector<int> dist(surface.vertex_count(), -1);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : surface.neighbors(u)) {
      if (dist[w] >= 0 || !usable(u, w)) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<int> graph_distances(const Surface& surface, VertexId p) {
  return graph_distances(surface, {}, std::vector<VertexId>{p});
}

std::vector<char> interior_region(const Surface& surface, const Path& curve) {
  if (!curve.closed) throw Error(ErrorCode::CurveNotClosed, "interior needs a closed curve");
  require_simple_path(surface, curve);
  std::set<Edge> curve_edges;
  for (const Edge& e : curve.edges()) curve_edges.insert(e);

  // Cell components across non-curve edges.
  const int F = surface.cell_count();
  std::vector<int> comp(F, -1);
  int count = 0;
  for (CellId start = 0; start < F; ++start) {
    if (comp[start] >= 0) continue;
    std::deque<CellId> queue{start};
    comp[start] = count;
    while (!queue.empty()) {
      CellId c = queue.front();
      queue.pop_front();
      auto cv = surface.cell(c);
      for (std::size_t i = 0; i < cv.size(); ++i) {
        VertexId u = cv[i], w = cv[(i + 1) % cv.size()];
        if (curve_edges.count(Edge(u, w))) continue;
        for (CellId d : surface.cells_of_edge(u, w)) {
          if (comp[d] < 0) {
            comp[d] = count;
            queue.push_back(d);
          }
        }
      }
    }
    ++count;
  }

  struct Candidate {
    int id;
    int size;
    bool along;
  };
  std::vector<Candidate> candidates;
  const VertexId c0 = curve.vertices[0], c1 = curve.vertices[1];
  for (int id = 0; id < count; ++id) {
    std::map<Edge, int> uses;
    int size = 0;
    for (CellId c = 0; c < F; ++c) {
      if (comp[c] != id) continue;
      ++size;
      auto cv = surface.cell(c);
      for (std::size_t i = 0; i < cv.size(); ++i) ++uses[Edge(cv[i], cv[(i + 1) % cv.size()])];
    }
    std::set<Edge> rim;
    for (const auto& [e, n] : uses)
      if (n == 1) rim.insert(e);
    if (rim != curve_edges) continue;
    bool along = false;
    for (CellId c : surface.cells_of_edge(c0, c1))
      if (comp[c] == id && surface.traverses(c, c0, c1)) along = true;
    // Disk check: Euler characteristic 1.
    std::set<VertexId> verts;
    for (const auto& [e, n] : uses) {
      verts.insert(e.a);
      verts.insert(e.b);
    }
    if (static_cast<int>(verts.size()) - static_cast<int>(uses.size()) + size != 1) continue;
    candidates.push_back({id, size, along});
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::InteriorNotDisk, "no side of the curve is a disk bounded by it");
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.along > b.along;
  });
  std::vector<char> mask(F, 0);
  for (CellId c = 0; c < F; ++c) {
    if (comp[c] != candidates[0].id) continue;
    if (surface.cell(c).size() != 3) {
      throw Error(ErrorCode::InteriorNotTriangulated, "cell " + std::to_string(c) + " is not a triangle");
    }
    mask[c] = 1;
  }
  return mask;
}

namespace {

struct Region {
  const Surface& s;
  std::vector<char> alive;
  std::vector<int> uses;  // alive triangles per vertex
  int remaining = 0;

  Region(const Surface& surface, std::vector<char> mask) : s(surface), alive(std::move(mask)), uses(surface.vertex_count(), 0) {
    for (CellId c = 0; c < s.cell_count(); ++c) {
      if (!alive[c]) continue;
      ++remaining;
      for (VertexId v : s.cell(c)) ++uses[v];
    }
  }

  CellId triangle_on(VertexId u, VertexId w) const {
    for (CellId c : s.cells_of_edge(u, w))
      if (alive[c]) return c;
    return -1;
  }

  VertexId third(CellId c, VertexId u, VertexId w) const {
    for (VertexId v : s.cell(c))
      if (v != u && v != w) return v;
    return -1;
  }

  void remove(CellId c) {
    alive[c] = 0;
    --remaining;
    for (VertexId v : s.cell(c)) --uses[v];
  }

  void restore(CellId c) {
    alive[c] = 1;
    ++remaining;
    for (VertexId v : s.cell(c)) ++uses[v];
  }
};

struct Move {
  CellId cell = -1;
  std::vector<VertexId> next;
};

bool same_distances(const std::vector<VertexId>& q, const std::vector<int>& before, const std::vector<int>& after) {
  for (VertexId v : q)
    if (before[v] != after[v]) return false;
  return true;
}

// Candidate moves at vertex index i of the cycle or path q, in preference order.
std::vector<Move> moves_at(const Region& r, const std::vector<VertexId>& q, int i, bool closed,
                           const std::vector<int>& dist, const std::vector<char>& frozen) {
  const int n = static_cast<int>(q.size());
  std::vector<Move> out;
  const VertexId x = q[i];
  const bool has_prev = closed || i > 0;
  const bool has_next = closed || i < n - 1;
  const VertexId prev = has_prev ? q[(i - 1 + n) % n] : -1;
  const VertexId next = has_next ? q[(i + 1) % n] : -1;

  if (has_prev && has_next && r.uses[x] == 1 && !frozen[x]) {
    CellId t = r.triangle_on(prev, x);
    if (t >= 0 && r.third(t, prev, x) == next) {
      Move m{t, q};
      m.next.erase(m.next.begin() + i);
      out.push_back(std::move(m));
      return out;
    }
  }
  // Insert the far vertex of the triangle on a path edge at x, same-distance
  // neighbour first, then the clockwise side.
  std::vector<std::pair<VertexId, bool>> sides;  // (neighbour, is next)
  if (has_next) sides.emplace_back(next, true);
  if (has_prev) sides.emplace_back(prev, false);
  std::stable_sort(sides.begin(), sides.end(), [&](const auto& a, const auto& b) {
    return (dist[a.first] == dist[x]) > (dist[b.first] == dist[x]);
  });
  for (auto [y, is_next] : sides) {
    CellId t = r.triangle_on(x, y);
    if (t < 0) continue;
    VertexId z = r.third(t, x, y);
    if (std::find(q.begin(), q.end(), z) != q.end()) continue;
    Move m{t, q};
    m.next.insert(m.next.begin() + (is_next ? i + 1 : i), z);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

DeformationSequence contract_cycle(const Surface& surface, const Path& curve, VertexId p) {
  if (!curve.closed) throw Error(ErrorCode::CurveNotClosed, "contraction needs a closed curve");
  const int at = index_of(curve, p);
  if (at < 0) throw Error(ErrorCode::AnchorNotOnCurve, "vertex " + std::to_string(p));
  Region region(surface, interior_region(surface, curve));

  DeformationSequence seq;
  seq.kind = DeformationKind::Contraction;
  std::vector<VertexId> q(curve.vertices.begin() + at, curve.vertices.end());
  q.insert(q.end(), curve.vertices.begin(), curve.vertices.begin() + at);
  seq.entries.push_back({q, true});
  const std::vector<char> frozen(surface.vertex_count(), 0);

  while (region.remaining > 1) {
    const auto dist = graph_distances(surface, region.alive, {p});
    std::vector<int> order(q.size() - 1);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k + 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[q[a]] > dist[q[b]]; });

    bool done = false;
    Move fallback;
    for (int i : order) {
      for (Move& m : moves_at(region, q, i, true, dist, frozen)) {
        region.remove(m.cell);
        const auto after = graph_distances(surface, region.alive, {p});
        if (same_distances(m.next, dist, after)) {
          q = std::move(m.next);
          seq.removed.push_back(m.cell);
          seq.distance_kept.push_back(1);
          done = true;
          break;
        }
        region.restore(m.cell);
        if (fallback.cell < 0) fallback = m;
      }
      if (done) break;
    }
    if (!done) {
      if (fallback.cell < 0) throw Error(ErrorCode::InteriorNotDisk, "contraction stalled");
      region.remove(fallback.cell);
      q = std::move(fallback.next);
      seq.removed.push_back(fallback.cell);
      seq.distance_kept.push_back(0);
    }
    seq.entries.push_back({q, true});
  }
  return seq;
}

DeformationSequence deform_arc(const Surface& surface, const Path& curve, VertexId p, VertexId q) {
  auto [along, against] = split_arcs(curve, p, q);
  Region region(surface, interior_region(surface, curve));
  DeformationSequence seq;
  seq.kind = DeformationKind::ArcDeformation;
  std::vector<VertexId> path = along;
  seq.entries.push_back({path, false});
  std::vector<char> frozen(surface.vertex_count(), 0);
  for (VertexId v : against) frozen[v] = 1;

  while (region.remaining > 0) {
    const auto dist = graph_distances(surface, region.alive, against);
    std::vector<int> order(path.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[path[a]] > dist[path[b]]; });
    bool done = false;
    for (int i : order) {
      auto moves = moves_at(region, path, i, false, dist, frozen);
      if (moves.empty()) continue;
      region.remove(moves[0].cell);
      path = std::move(moves[0].next);
      seq.removed.push_back(moves[0].cell);
      seq.distance_kept.push_back(1);
      done = true;
      break;
    }
    if (!done) throw Error(ErrorCode::InteriorNotDisk, "arc deformation stalled");
    seq.entries.push_back({path, false});
  }
  if (path != against) throw Error(ErrorCode::InteriorNotDisk, "arc did not reach the opposite side");
  return seq;
}

bool oracle_definition_c(const Surface& surface, const Path& curve, VertexId p, VertexId q, int cell_limit) {
  if (surface.cell_count() > cell_limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(surface.cell_count()) + " cells exceed the oracle limit " +
                                         std::to_string(cell_limit));
  }
  auto [along, against] = split_arcs(curve, p, q);
  std::vector<std::vector<VertexId>> paths;
  std::vector<VertexId> cur{p};
  std::vector<char> on(surface.vertex_count(), 0);
  on[p] = 1;
  auto dfs = [&](auto&& self) -> void {
    VertexId u = cur.back();
    if (u == q) {
      paths.push_back(cur);
      return;
    }
    for (VertexId w : surface.neighbors(u)) {
      if (on[w]) continue;
      on[w] = 1;
      cur.push_back(w);
      self(self);
      cur.pop_back();
      on[w] = 0;
    }
  };
  dfs(dfs);
  auto find = [&](const std::vector<VertexId>& v) {
    return static_cast<int>(std::find(paths.begin(), paths.end(), v) - paths.begin());
  };
  const int start = find(along), goal = find(against);
  std::vector<char> seen(paths.size(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (i == goal) return true;
    const Path a{paths[i], false};
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (seen[j]) continue;
      if (is_side_gradually_varied(surface, a, {paths[j], false})) {
        seen[j] = 1;
        queue.push_back(static_cast<int>(j));
      }
    }
  }
  return false;
}

CertifyReport certify_simply_connected(const Surface& surface, const SampleSpec& spec) {
  CertifyReport report;
  std::vector<Path> curves = spec.curves;
  Rng rng(spec.seed);
  for (int k = 0; k < spec.random_curves; ++k) {
    try {
      curves.push_back(random_curve(surface, rng.next()));
    } catch (const Error& e) {
      report.warning = std::string("curve sampling: ") + e.what();
      break;
    }
  }
  for (const Path& c : curves) {
    const std::size_t n = c.size();
    for (int k = 0; k < spec.pairs_per_curve && n >= 2; ++k) {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      CertifyEntry entry{c, c.vertices[i], c.vertices[j], false, ""};
      try {
        deform_arc(surface, c, entry.p, entry.q);
        entry.success = true;
      } catch (const Error& e) {
        entry.error = e.what();
      }
      report.entries.push_back(std::move(entry));
    }
  }
  if (report.entries.empty()) {
    report.certified = true;
    if (!report.warning.empty()) report.warning += "; ";
    report.warning += "empty sample: certification is vacuous";
    return report;
  }
  report.certified = std::all_of(report.entries.begin(), report.entries.end(),
                                 [](const CertifyEntry& e) { return e.success; });
  return report;
}

}  // namespace djc
