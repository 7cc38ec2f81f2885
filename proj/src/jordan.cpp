#include "djc/jordan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace djc {

std::string_view to_string(VertexOrigin origin) {
  switch (origin) {
    case VertexOrigin::Original: return "original";
    case VertexOrigin::LatticePoint: return "lattice";
    case VertexOrigin::SnapPoint: return "snap";
    case VertexOrigin::VeblenEdge: return "veblen-edge";
    case VertexOrigin::VeblenFace: return "veblen-face";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesesFailed: return "hypotheses-failed";
  }
  return "unknown";
}

namespace {

void require_off_boundary(const Surface& s, const Path& curve) {
  for (VertexId v : curve.vertices) {
    if (s.contains_vertex(v) && s.is_boundary_vertex(v)) {
      throw Error(ErrorCode::CurveTouchesBoundary, "curve vertex " + std::to_string(v) + " lies on the boundary");
    }
  }
}

}  // namespace

VeblenResult insert_veblen_points(const Surface& surface, const Path& curve, const VeblenOptions& options) {
  require_off_boundary(surface, curve);
  const int V = surface.vertex_count();
  const int F = surface.cell_count();
  std::set<Edge> on_curve;
  if (!options.subdivide_curve_edges)
    for (const Edge& e : curve.edges()) on_curve.insert(e);

  VeblenResult out;
  out.provenance.assign(V, Provenance{});
  out.face_point.resize(F);
  for (CellId c = 0; c < F; ++c) {
    out.face_point[c] = V + c;
    out.provenance.push_back({VertexOrigin::VeblenFace, c, -1});
  }
  std::vector<VertexId> edge_point(surface.edge_count(), -1);
  VertexId next = V + F;
  for (int e = 0; e < surface.edge_count(); ++e) {
    const Edge& ed = surface.edges()[e];
    if (on_curve.count(ed)) continue;
    edge_point[e] = next++;
    out.provenance.push_back({VertexOrigin::VeblenEdge, ed.a, ed.b});
  }

  std::vector<std::vector<VertexId>> cells;
  for (CellId c = 0; c < F; ++c) {
    auto cv = surface.cell(c);
    const VertexId f = out.face_point[c];
    for (std::size_t i = 0; i < cv.size(); ++i) {
      VertexId u = cv[i], w = cv[(i + 1) % cv.size()];
      VertexId m = edge_point[surface.edge_index(u, w)];
      if (m < 0) {
        cells.push_back({f, u, w});
      } else {
        cells.push_back({f, u, m});
        cells.push_back({f, m, w});
      }
    }
  }
  out.surface = Surface(next, std::move(cells));
  return out;
}

int SeparationReport::component_of(VertexId v) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (std::binary_search(components[i].begin(), components[i].end(), v)) return static_cast<int>(i);
  return -1;
}

bool SeparationReport::seeds_separated() const {
  if (seed_a < 0 || seed_b < 0) return false;
  int ca = component_of(seed_a), cb = component_of(seed_b);
  return ca >= 0 && cb >= 0 && ca != cb;
}

namespace {

// Components of S - C where C is given by its vertex set only.
std::vector<std::vector<VertexId>> flood(const Surface& s, const std::vector<VertexId>& removed) {
  std::vector<int> label(s.vertex_count(), -1);
  for (VertexId v : removed) label[v] = -2;
  std::vector<std::vector<VertexId>> comps;
  for (VertexId start = 0; start < s.vertex_count(); ++start) {
    if (label[start] != -1) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::deque<VertexId> queue{start};
    label[start] = id;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      comps.back().push_back(u);
      for (VertexId w : s.neighbors(u)) {
        if (label[w] == -1) {
          label[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });
  return comps;
}

const Surface& oriented(const Surface& s, Surface& storage) {
  if (is_consistently_oriented(s)) return s;
  try {
    storage = orient(s);
    return storage;
  } catch (const Error&) {
    return s;
  }
}

void fill_flanks(const Surface& s, SeparationReport& r) {
  Surface storage;
  const Surface& o = oriented(s, storage);
  const auto& cv = r.curve.vertices;
  const std::size_t n = cv.size();
  std::vector<char> on_curve(s.vertex_count(), 0);
  for (VertexId v : cv) on_curve[v] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId u = cv[i], w = cv[(i + 1) % n];
    for (CellId c : o.cells_of_edge(u, w)) {
      if (o.traverses(c, u, w)) r.flank_clockwise.push_back(c);
      else r.flank_counterclockwise.push_back(c);
    }
  }
  auto dedupe = [](std::vector<CellId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(r.flank_clockwise);
  dedupe(r.flank_counterclockwise);

  if (n < 2) return;
  const VertexId p = cv[0], q = cv[1];
  for (CellId c : o.cells_of_edge(p, q)) {
    auto cell = o.cell(c);
    const int k = static_cast<int>(cell.size());
    const int at = o.position_in_cell(c, p);
    if (o.traverses(c, p, q)) {
      // last off-curve vertex walking the cell from p
      for (int j = 1; j < k; ++j) {
        VertexId v = cell[(at + j) % k];
        if (!on_curve[v]) r.seed_a = v;
      }
    } else {
      for (int j = 1; j < k; ++j) {
        VertexId v = cell[(at + j) % k];
        if (!on_curve[v]) {
          r.seed_b = v;
          break;
        }
      }
    }
  }
}

SeparationReport separate(const Surface& s, const Path& curve, bool strict_edges) {
  if (!curve.closed) throw Error(ErrorCode::CurveNotClosed, "separation needs a closed curve");
  if (strict_edges) {
    require_simple_path(s, curve);
  } else {
    for (VertexId v : curve.vertices) s.require_vertex(v);
  }
  require_off_boundary(s, curve);
  SeparationReport r;
  r.curve = curve;
  r.components = flood(s, curve.vertices);
  fill_flanks(s, r);
  return r;
}

}  // namespace

SeparationReport components(const Surface& surface, const Path& curve) {
  return separate(surface, curve, true);
}

Theorem1Result check_theorem1(const Surface& surface, const Path& curve, const HypothesisOptions& options) {
  Theorem1Result out;
  out.hypotheses = check_theorem1_hypotheses(surface, curve, options);
  out.report = components(surface, curve);
  out.conclusion_holds = out.report.components.size() >= 2 && out.report.seeds_separated();
  if (!out.hypotheses.ok()) {
    out.verdict = Verdict::HypothesesFailed;
    out.note = out.conclusion_holds ? "conclusion holds, hypotheses fail" : "conclusion fails, hypotheses fail";
  } else {
    out.verdict = out.conclusion_holds ? Verdict::Pass : Verdict::Fail;
  }
  if (!out.conclusion_holds) {
    const bool closed = boundary(surface).edges.empty();
    const int chi = surface.euler_characteristic();
    if (chi != (closed ? 2 : 1)) {
      if (!out.note.empty()) out.note += "; ";
      out.note += "surface not simply connected (Euler characteristic " + std::to_string(chi) + ")";
    }
  }
  return out;
}

Theorem2Result check_theorem2(const Surface& surface, const Path& curve, const VeblenOptions& options) {
  if (!curve.closed) throw Error(ErrorCode::CurveNotClosed, "refinement check needs a closed curve");
  require_simple_path(surface, curve);
  Theorem2Result out;
  out.refined = insert_veblen_points(surface, curve, options);
  out.report = separate(out.refined.surface, curve, !options.subdivide_curve_edges);

  SeparationReport original;
  original.curve = curve;
  fill_flanks(surface, original);
  auto component_set = [&](const std::vector<CellId>& cells) {
    std::set<int> ids;
    for (CellId c : cells) ids.insert(out.report.component_of(out.refined.face_point[c]));
    return ids;
  };
  auto a = component_set(original.flank_clockwise);
  auto b = component_set(original.flank_counterclockwise);
  out.flanks_separated = a.size() == 1 && b.size() == 1 && *a.begin() != *b.begin();
  out.verdict = out.report.components.size() == 2 ? Verdict::Pass : Verdict::Fail;
  if (out.report.components.size() == 2 && !out.flanks_separated) out.note = "flank face points mixed";
  return out;
}

DegenerateBoundary classify_arc_neighborhood_boundary(const Surface& surface, std::span<const VertexId> arc) {
  if (arc.empty()) throw Error(ErrorCode::NotAnArc, "empty arc");
  try {
    Path p{{arc.begin(), arc.end()}, false};
    require_simple_path(surface, p);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotAnArc, e.what());
  }
  std::set<VertexId> in_arc(arc.begin(), arc.end());
  std::set<Edge> link;
  std::set<CellId> touched;
  for (VertexId x : arc)
    for (CellId c : surface.cells_of_vertex(x)) touched.insert(c);
  for (CellId c : touched) {
    auto cv = surface.cell(c);
    for (std::size_t i = 0; i < cv.size(); ++i) {
      VertexId u = cv[i], w = cv[(i + 1) % cv.size()];
      if (!in_arc.count(u) && !in_arc.count(w)) link.emplace(u, w);
    }
  }
  DegenerateBoundary out;
  out.link_edges.assign(link.begin(), link.end());

  std::map<VertexId, std::set<VertexId>> adj;
  for (const Edge& e : link) {
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  // Strip degree-1 vertices down to the 2-core.
  std::map<VertexId, std::set<VertexId>> core = adj;
  std::deque<VertexId> leaves;
  for (const auto& [v, nb] : core)
    if (nb.size() <= 1) leaves.push_back(v);
  while (!leaves.empty()) {
    VertexId v = leaves.front();
    leaves.pop_front();
    auto it = core.find(v);
    if (it == core.end()) continue;
    for (VertexId w : it->second) {
      auto& other = core[w];
      other.erase(v);
      if (other.size() == 1) leaves.push_back(w);
    }
    core.erase(it);
  }

  if (!core.empty()) {
    bool all_two = std::all_of(core.begin(), core.end(), [](const auto& kv) { return kv.second.size() == 2; });
    VertexId start = core.begin()->first;
    out.cycle.push_back(start);
    VertexId prev = start, cur = *core[start].begin();
    while (cur != start && out.cycle.size() <= core.size()) {
      out.cycle.push_back(cur);
      const auto& nb = core[cur];
      VertexId nxt = -1;
      for (VertexId w : nb) {
        if (w != prev) {
          nxt = w;
          break;
        }
      }
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
    }
    out.cycle_is_simple = all_two && cur == start && out.cycle.size() == core.size() && core.size() >= 3;
  }

  // Branches: maximal paths through the stripped forest.
  std::map<VertexId, std::set<VertexId>> forest;
  for (const Edge& e : link) {
    const bool core_edge = core.count(e.a) && core.at(e.a).count(e.b);
    if (core_edge) continue;
    forest[e.a].insert(e.b);
    forest[e.b].insert(e.a);
  }
  auto is_node = [&](VertexId v) { return core.count(v) || forest.at(v).size() != 2; };
  std::set<Edge> used;
  // Attachment points first so each branch starts where it hangs.
  std::vector<VertexId> starts;
  for (const auto& [v, nb] : forest)
    if (core.count(v) || nb.size() > 2) starts.push_back(v);
  for (const auto& [v, nb] : forest)
    if (!core.count(v) && nb.size() == 1) starts.push_back(v);
  for (VertexId v : starts) {
    for (VertexId w : forest.at(v)) {
      if (used.count(Edge(v, w))) continue;
      std::vector<VertexId> branch{v};
      VertexId prev = v, cur = w;
      used.emplace(v, w);
      branch.push_back(cur);
      while (!is_node(cur)) {
        VertexId nxt = -1;
        for (VertexId x : forest.at(cur))
          if (x != prev) nxt = x;
        if (nxt < 0 || used.count(Edge(cur, nxt))) break;
        used.emplace(cur, nxt);
        prev = cur;
        cur = nxt;
        branch.push_back(cur);
      }
      out.branches.push_back(std::move(branch));
    }
  }
  return out;
}

}  // namespace djc
