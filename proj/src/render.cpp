#include "djc/render.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <cstdio>

#include "djc/error.hpp"

namespace djc {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::vector<VertexId> boundary_cycle(const Surface& surface) {
  Boundary b = boundary(surface);
  if (b.edges.empty()) throw Error(ErrorCode::NoCoordinates, "closed surface has no boundary to pin");
  std::vector<std::vector<VertexId>> next(surface.vertex_count());
  for (const Edge& e : b.edges) {
    next[e.a].push_back(e.b);
    next[e.b].push_back(e.a);
  }
  for (VertexId v : b.vertices)
    if (next[v].size() != 2) throw Error(ErrorCode::NoCoordinates, "boundary is not a simple cycle");
  std::vector<VertexId> cycle{b.vertices.front()};
  VertexId prev = -1, cur = b.vertices.front();
  while (true) {
    VertexId nxt = next[cur][0] != prev ? next[cur][0] : next[cur][1];
    if (nxt == cycle.front()) break;
    cycle.push_back(nxt);
    prev = cur;
    cur = nxt;
    if (cycle.size() > b.vertices.size()) break;
  }
  if (cycle.size() != b.vertices.size()) throw Error(ErrorCode::NoCoordinates, "boundary has several cycles");
  return cycle;
}

}  // namespace

Layout tutte_layout(const Surface& surface) {
  const auto rim = boundary_cycle(surface);
  const int n = surface.vertex_count();
  Layout xy(n, {0.0, 0.0});
  std::vector<int> slot(n, -1);
  const double pi = std::acos(-1.0);
  std::vector<char> pinned(n, 0);
  for (std::size_t k = 0; k < rim.size(); ++k) {
    const double a = 2 * pi * static_cast<double>(k) / static_cast<double>(rim.size());
    xy[rim[k]] = {std::cos(a), std::sin(a)};
    pinned[rim[k]] = 1;
  }
  int free = 0;
  for (VertexId v = 0; v < n; ++v)
    if (!pinned[v] && !surface.cells_of_vertex(v).empty()) slot[v] = free++;
  if (free == 0) return xy;
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(free), by = Eigen::VectorXd::Zero(free);
  for (VertexId v = 0; v < n; ++v) {
    if (slot[v] < 0) continue;
    auto nb = surface.neighbors(v);
    entries.emplace_back(slot[v], slot[v], static_cast<double>(nb.size()));
    for (VertexId w : nb) {
      if (slot[w] >= 0) {
        entries.emplace_back(slot[v], slot[w], -1.0);
      } else {
        bx[slot[v]] += xy[w][0];
        by[slot[v]] += xy[w][1];
      }
    }
  }
  Eigen::SparseMatrix<double> lap(free, free);
  lap.setFromTriplets(entries.begin(), entries.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoCoordinates, "layout system is singular");
  Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
  for (VertexId v = 0; v < n; ++v)
    if (slot[v] >= 0) xy[v] = {x[slot[v]], y[slot[v]]};
  return xy;
}

Layout layout_of(const EmbeddedComplex& embedded) {
  Layout xy;
  xy.reserve(embedded.coords.size());
  for (const auto& p : embedded.coords) xy.push_back({p.x.get_d(), p.y.get_d()});
  return xy;
}

std::string render_svg(const Surface& surface, const Layout& layout, const std::vector<Path>& curves,
                       const std::vector<CellId>& shaded) {
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  bool first = true;
  for (VertexId v = 0; v < surface.vertex_count(); ++v) {
    if (surface.cells_of_vertex(v).empty()) continue;
    const auto& p = layout.at(v);
    if (first) {
      lo_x = hi_x = p[0];
      lo_y = hi_y = p[1];
      first = false;
    }
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  const double size = 800.0, pad = 20.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double k = (size - 2 * pad) / span;
  auto sx = [&](VertexId v) { return num(pad + (layout[v][0] - lo_x) * k); };
  auto sy = [&](VertexId v) { return num(size - pad - (layout[v][1] - lo_y) * k); };

  std::vector<char> shade(surface.cell_count(), 0);
  for (CellId c : shaded)
    if (c >= 0 && c < surface.cell_count()) shade[c] = 1;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n<g stroke=\"#7a869a\" stroke-width=\"0.5\">\n";
  for (CellId c = 0; c < surface.cell_count(); ++c) {
    out += "<polygon fill=\"";
    out += shade[c] ? "#f4a582" : "#eef2f7";
    out += "\" points=\"";
    auto cell = surface.cell(c);
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) out += ' ';
      out += sx(cell[i]) + "," + sy(cell[i]);
    }
    out += "\"/>\n";
  }
  out += "</g>\n<g fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\">\n";
  for (const Path& p : curves) {
    out += p.closed ? "<polygon points=\"" : "<polyline points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (i) out += ' ';
      out += sx(p.vertices[i]) + "," + sy(p.vertices[i]);
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::vector<std::string> render_sequence(const Surface& surface, const Layout& layout,
                                         const DeformationSequence& sequence) {
  std::vector<std::string> frames;
  for (std::size_t i = 0; i < sequence.entries.size(); ++i) {
    std::vector<CellId> shaded;
    if (i > 0 && i - 1 < sequence.removed.size()) shaded.push_back(sequence.removed[i - 1]);
    frames.push_back(render_svg(surface, layout, {sequence.entries[i]}, shaded));
  }
  return frames;
}

}  // namespace djc
