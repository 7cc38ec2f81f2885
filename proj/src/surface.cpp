#include "djc/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

namespace djc {

namespace {

template <typename T>
bool sorted_contains(const std::vector<T>& v, T x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Builds a CSR table from (row, value) pairs; values within a row are sorted
// and deduplicated.
void build_csr(int rows, const std::vector<std::pair<std::int32_t, std::int32_t>>& pairs,
               std::vector<std::int32_t>& offsets, std::vector<std::int32_t>& values) {
  std::vector<std::int32_t> fill(rows + 1, 0);
  for (const auto& p : pairs) ++fill[p.first + 1];
  std::partial_sum(fill.begin(), fill.end(), fill.begin());
  std::vector<std::int32_t> raw(pairs.size());
  std::vector<std::int32_t> cursor(fill.begin(), fill.end() - 1);
  for (const auto& [row, value] : pairs) raw[cursor[row]++] = value;
  offsets.assign(rows + 1, 0);
  values.clear();
  values.reserve(raw.size());
  for (int r = 0; r < rows; ++r) {
    auto first = raw.begin() + fill[r], last = raw.begin() + fill[r + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    values.insert(values.end(), first, last);
    offsets[r + 1] = static_cast<std::int32_t>(values.size());
  }
}

}  // namespace

Surface::Surface(int vertex_count, std::vector<std::vector<VertexId>> cells)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw Error(ErrorCode::BadParameters, "negative vertex count");
  std::size_t total = 0;
  for (const auto& c : cells) total += c.size();
  cell_vertices_.reserve(total);
  cell_offsets_.reserve(cells.size() + 1);
  for (const auto& c : cells) {
    for (VertexId v : c) {
      if (v < 0 || v >= vertex_count_) {
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
      }
      cell_vertices_.push_back(v);
    }
    cell_offsets_.push_back(static_cast<std::int32_t>(cell_vertices_.size()));
  }

  std::vector<std::pair<std::uint64_t, CellId>> half;
  half.reserve(total);
  std::vector<std::pair<std::int32_t, std::int32_t>> vertex_cell;
  vertex_cell.reserve(total);
  std::vector<std::pair<std::int32_t, std::int32_t>> adjacency;
  adjacency.reserve(2 * total);
  for (CellId c = 0; c < cell_count(); ++c) {
    auto cv = cell(c);
    for (std::size_t i = 0; i < cv.size(); ++i) {
      VertexId u = cv[i];
      VertexId w = cv[(i + 1) % cv.size()];
      vertex_cell.emplace_back(u, c);
      if (u == w) continue;
      half.emplace_back(Edge(u, w).key(), c);
      adjacency.emplace_back(u, w);
      adjacency.emplace_back(w, u);
    }
  }
  std::sort(half.begin(), half.end());
  // A cell that repeats an edge keeps both records so validate() can see it.
  for (std::size_t i = 0; i < half.size();) {
    std::size_t j = i;
    while (j < half.size() && half[j].first == half[i].first) ++j;
    edge_keys_.push_back(half[i].first);
    edges_.emplace_back(static_cast<VertexId>(half[i].first >> 32),
                        static_cast<VertexId>(half[i].first & 0xffffffffu));
    for (std::size_t k = i; k < j; ++k) edge_cells_.push_back(half[k].second);
    edge_cell_offsets_.push_back(static_cast<std::int32_t>(edge_cells_.size()));
    i = j;
  }
  build_csr(vertex_count_, vertex_cell, vertex_cell_offsets_, vertex_cells_);
  build_csr(vertex_count_, adjacency, adjacency_offsets_, adjacency_);

  boundary_vertex_.assign(vertex_count_, 0);
  for (int e = 0; e < edge_count(); ++e) {
    if (is_boundary_edge(e)) {
      boundary_vertex_[edges_[e].a] = 1;
      boundary_vertex_[edges_[e].b] = 1;
    }
  }
}

Surface Surface::from_cells(std::vector<std::vector<VertexId>> cells) {
  VertexId top = -1;
  for (const auto& c : cells)
    for (VertexId v : c) top = std::max(top, v);
  return Surface(top + 1, std::move(cells));
}

std::vector<std::vector<VertexId>> Surface::cells() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(cell_count());
  for (CellId c = 0; c < cell_count(); ++c) {
    auto cv = cell(c);
    out.emplace_back(cv.begin(), cv.end());
  }
  return out;
}

int Surface::edge_index(VertexId u, VertexId v) const {
  auto key = Edge(u, v).key();
  auto it = std::lower_bound(edge_keys_.begin(), edge_keys_.end(), key);
  if (it == edge_keys_.end() || *it != key) return -1;
  return static_cast<int>(it - edge_keys_.begin());
}

std::span<const CellId> Surface::cells_of_edge(int edge) const {
  return {edge_cells_.data() + edge_cell_offsets_[edge],
          static_cast<std::size_t>(edge_cell_offsets_[edge + 1] - edge_cell_offsets_[edge])};
}

std::span<const CellId> Surface::cells_of_edge(VertexId u, VertexId v) const {
  int e = edge_index(u, v);
  if (e < 0) return {};
  return cells_of_edge(e);
}

std::span<const VertexId> Surface::neighbors(VertexId v) const {
  return {adjacency_.data() + adjacency_offsets_[v],
          static_cast<std::size_t>(adjacency_offsets_[v + 1] - adjacency_offsets_[v])};
}

std::span<const CellId> Surface::cells_of_vertex(VertexId v) const {
  return {vertex_cells_.data() + vertex_cell_offsets_[v],
          static_cast<std::size_t>(vertex_cell_offsets_[v + 1] - vertex_cell_offsets_[v])};
}

void Surface::require_vertex(VertexId v) const {
  if (!contains_vertex(v)) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  }
}

bool Surface::traverses(CellId c, VertexId u, VertexId v) const {
  auto cv = cell(c);
  for (std::size_t i = 0; i < cv.size(); ++i) {
    if (cv[i] == u && cv[(i + 1) % cv.size()] == v) return true;
  }
  return false;
}

int Surface::position_in_cell(CellId c, VertexId v) const {
  auto cv = cell(c);
  for (std::size_t i = 0; i < cv.size(); ++i)
    if (cv[i] == v) return static_cast<int>(i);
  return -1;
}

int Surface::euler_characteristic() const {
  int used = 0;
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (!cells_of_vertex(v).empty()) ++used;
  return used - edge_count() + cell_count();
}

bool Subcomplex::contains(VertexId v) const { return sorted_contains(vertices, v); }

Subcomplex induced_subcomplex(const Surface& surface, std::vector<VertexId> vertices) {
  Subcomplex sub;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (VertexId v : vertices) surface.require_vertex(v);
  sub.vertices = std::move(vertices);
  for (VertexId v : sub.vertices) {
    for (CellId c : surface.cells_of_vertex(v)) {
      auto cv = surface.cell(c);
      if (*std::min_element(cv.begin(), cv.end()) != v) continue;  // count once
      bool inside = std::all_of(cv.begin(), cv.end(),
                                [&](VertexId w) { return sorted_contains(sub.vertices, w); });
      if (inside) sub.cells.push_back(c);
    }
    for (VertexId w : surface.neighbors(v)) {
      if (w > v && sorted_contains(sub.vertices, w)) sub.edges.emplace_back(v, w);
    }
  }
  std::sort(sub.cells.begin(), sub.cells.end());
  std::sort(sub.edges.begin(), sub.edges.end());
  return sub;
}

std::vector<Violation> validate(const Surface& surface) {
  std::vector<Violation> out;
  for (CellId c = 0; c < surface.cell_count(); ++c) {
    auto cv = surface.cell(c);
    if (cv.size() < 3) {
      out.push_back({ViolationKind::CellTooShort,
                     "cell " + std::to_string(c) + " has fewer than 3 vertices", {c}, {}});
    }
    std::vector<VertexId> sorted(cv.begin(), cv.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back({ViolationKind::CellNotSimple,
                     "cell " + std::to_string(c) + " is not a simple cycle", {c}, {}});
    }
  }

  std::map<std::pair<CellId, CellId>, std::vector<Edge>> shared;
  for (int e = 0; e < surface.edge_count(); ++e) {
    auto cells = surface.cells_of_edge(e);
    if (cells.size() > 2) {
      out.push_back({ViolationKind::EdgeOverShared,
                     "edge " + std::to_string(surface.edges()[e].a) + "-" +
                         std::to_string(surface.edges()[e].b) + " lies in more than two cells",
                     std::vector<CellId>(cells.begin(), cells.end()),
                     {surface.edges()[e]}});
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (cells[i] != cells[j]) shared[{cells[i], cells[j]}].push_back(surface.edges()[e]);
  }
  for (const auto& [pair, edges] : shared) {
    if (edges.size() > 1) {
      out.push_back({ViolationKind::CellsShareEdges,
                     "cells share >1 edge: " + std::to_string(pair.first) + " and " +
                         std::to_string(pair.second),
                     {pair.first, pair.second}, edges});
    }
  }

  for (CellId c = 0; c < surface.cell_count(); ++c) {
    auto cv = surface.cell(c);
    if (cv.empty()) continue;
    std::vector<VertexId> mine(cv.begin(), cv.end());
    std::sort(mine.begin(), mine.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    for (CellId d : surface.cells_of_vertex(cv[0])) {
      if (d == c) continue;
      auto dv = surface.cell(d);
      std::vector<VertexId> other(dv.begin(), dv.end());
      std::sort(other.begin(), other.end());
      other.erase(std::unique(other.begin(), other.end()), other.end());
      if (other.size() > mine.size() &&
          std::includes(other.begin(), other.end(), mine.begin(), mine.end())) {
        out.push_back({ViolationKind::CellNotMinimal,
                       "cell " + std::to_string(c) + " is a proper subset of cell " +
                           std::to_string(d),
                       {c, d}, {}});
      }
    }
  }
  return out;
}

Subcomplex neighborhood(const Surface& surface, VertexId p) {
  surface.require_vertex(p);
  std::vector<VertexId> verts{p};
  for (CellId c : surface.cells_of_vertex(p)) {
    auto cv = surface.cell(c);
    verts.insert(verts.end(), cv.begin(), cv.end());
  }
  return induced_subcomplex(surface, std::move(verts));
}

Subcomplex arc_neighborhood(const Surface& surface, std::span<const VertexId> path) {
  if (path.empty()) throw Error(ErrorCode::NotAPath, "empty path");
  std::vector<VertexId> seen(path.begin(), path.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::NotAPath, "path repeats a vertex");
  }
  for (VertexId v : path) surface.require_vertex(v);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!surface.has_edge(path[i], path[i + 1])) {
      throw Error(ErrorCode::NotAPath, "no edge " + std::to_string(path[i]) + "-" +
                                           std::to_string(path[i + 1]));
    }
  }
  std::vector<VertexId> verts(path.begin(), path.end());
  for (VertexId x : path) {
    for (CellId c : surface.cells_of_vertex(x)) {
      auto cv = surface.cell(c);
      verts.insert(verts.end(), cv.begin(), cv.end());
    }
  }
  return induced_subcomplex(surface, std::move(verts));
}

namespace {

// Ring segment of cell c around p that starts at `entry` (a cell-neighbour of
// p) and ends at p's other cell-neighbour, p itself excluded.
std::vector<VertexId> segment_from(const Surface& s, CellId c, VertexId p, VertexId entry) {
  auto cv = s.cell(c);
  const int n = static_cast<int>(cv.size());
  const int i = s.position_in_cell(c, p);
  std::vector<VertexId> seg;
  seg.reserve(n - 1);
  if (cv[(i + 1) % n] == entry) {
    for (int k = 1; k < n; ++k) seg.push_back(cv[(i + k) % n]);
  } else {
    for (int k = 1; k < n; ++k) seg.push_back(cv[((i - k) % n + n) % n]);
  }
  return seg;
}

[[noreturn]] void irregular(VertexId p, const std::string& why) {
  throw Error(ErrorCode::IrregularVertex, "vertex " + std::to_string(p) + ": " + why);
}

// The other cell on edge {p, v}, -1 at the boundary.
CellId across(const Surface& s, VertexId p, VertexId v, CellId from) {
  auto cells = s.cells_of_edge(p, v);
  if (cells.size() > 2) irregular(p, "edge lies in more than two cells");
  for (CellId c : cells)
    if (c != from) return c;
  return -1;
}

}  // namespace

VertexLink vertex_link(const Surface& surface, VertexId p) {
  surface.require_vertex(p);
  auto incident = surface.cells_of_vertex(p);
  if (incident.empty()) irregular(p, "no incident cell");

  const CellId first = incident[0];
  auto cv = surface.cell(first);
  const int n = static_cast<int>(cv.size());
  const int i = surface.position_in_cell(first, p);
  VertexLink link;
  link.ring = segment_from(surface, first, p, cv[(i + 1) % n]);
  std::vector<CellId> visited{first};

  CellId current = first;
  VertexId exit = link.ring.back();
  for (;;) {
    CellId next = across(surface, p, exit, current);
    if (next < 0) break;
    if (next == first) {
      link.closed = true;
      break;
    }
    if (std::find(visited.begin(), visited.end(), next) != visited.end()) {
      irregular(p, "umbrella revisits a cell");
    }
    visited.push_back(next);
    auto seg = segment_from(surface, next, p, exit);
    link.ring.insert(link.ring.end(), seg.begin() + 1, seg.end());
    exit = seg.back();
    current = next;
  }

  if (link.closed) {
    if (link.ring.size() > 1 && link.ring.back() == link.ring.front()) link.ring.pop_back();
  } else {
    // Walk the other way from the first cell and prepend.
    current = first;
    VertexId entry = link.ring.front();
    std::vector<VertexId> prefix;
    for (;;) {
      CellId next = across(surface, p, entry, current);
      if (next < 0) break;
      if (std::find(visited.begin(), visited.end(), next) != visited.end()) {
        irregular(p, "umbrella revisits a cell");
      }
      visited.push_back(next);
      auto seg = segment_from(surface, next, p, entry);
      for (std::size_t k = 1; k < seg.size(); ++k) prefix.push_back(seg[k]);
      entry = seg.back();
      current = next;
    }
    std::reverse(prefix.begin(), prefix.end());
    prefix.insert(prefix.end(), link.ring.begin(), link.ring.end());
    link.ring = std::move(prefix);
  }

  if (visited.size() != incident.size()) irregular(p, "incident cells form more than one umbrella");
  std::vector<VertexId> sorted = link.ring;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    irregular(p, "link repeats a vertex");
  }
  return link;
}

std::vector<VertexId> link_cycle(const Surface& surface, VertexId p) {
  surface.require_vertex(p);
  if (surface.is_boundary_vertex(p)) {
    throw Error(ErrorCode::BoundaryVertex, "vertex " + std::to_string(p) + " lies on the boundary");
  }
  VertexLink link = vertex_link(surface, p);
  if (!link.closed) {
    throw Error(ErrorCode::BoundaryVertex, "vertex " + std::to_string(p) + " has an open umbrella");
  }
  return std::move(link.ring);
}

Surface orient(const Surface& surface) {
  const int n = surface.cell_count();
  if (n == 0) return surface;
  std::vector<int> flip(n, -1);
  flip[0] = 0;
  std::deque<CellId> queue{0};
  while (!queue.empty()) {
    CellId c = queue.front();
    queue.pop_front();
    auto cv = surface.cell(c);
    for (std::size_t i = 0; i < cv.size(); ++i) {
      VertexId u = cv[i];
      VertexId v = cv[(i + 1) % cv.size()];
      // Effective direction of c along u->v is !flip[c]; the neighbour must run v->u.
      const bool c_forward = flip[c] == 0;
      for (CellId d : surface.cells_of_edge(u, v)) {
        if (d == c) continue;
        const bool d_raw_forward = surface.traverses(d, u, v);
        const int want = (d_raw_forward == c_forward) ? 1 : 0;
        if (flip[d] < 0) {
          flip[d] = want;
          queue.push_back(d);
        } else if (flip[d] != want) {
          throw Error(ErrorCode::NonOrientable, "orientation conflict across edge " +
                                                    std::to_string(u) + "-" + std::to_string(v));
        }
      }
    }
  }
  std::vector<std::vector<VertexId>> cells = surface.cells();
  for (CellId c = 0; c < n; ++c) {
    if (flip[c] < 0) {
      throw Error(ErrorCode::DisconnectedComplex,
                  "cell " + std::to_string(c) + " not reachable through shared edges");
    }
    if (flip[c] == 1) std::reverse(cells[c].begin(), cells[c].end());
  }
  return Surface(surface.vertex_count(), std::move(cells));
}

bool is_consistently_oriented(const Surface& surface) {
  for (int e = 0; e < surface.edge_count(); ++e) {
    auto cells = surface.cells_of_edge(e);
    if (cells.size() != 2) continue;
    const Edge& ed = surface.edges()[e];
    if (surface.traverses(cells[0], ed.a, ed.b) == surface.traverses(cells[1], ed.a, ed.b)) {
      return false;
    }
  }
  return true;
}

Boundary boundary(const Surface& surface) {
  Boundary b;
  for (int e = 0; e < surface.edge_count(); ++e) {
    if (!surface.is_boundary_edge(e)) continue;
    b.edges.push_back(surface.edges()[e]);
    b.vertices.push_back(surface.edges()[e].a);
    b.vertices.push_back(surface.edges()[e].b);
  }
  std::sort(b.vertices.begin(), b.vertices.end());
  b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
  return b;
}

std::vector<VertexId> canonical_rotation(std::span<const VertexId> cycle) {
  if (cycle.empty()) return {};
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::vector<VertexId> out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

std::vector<VertexId> canonical_cycle_undirected(std::span<const VertexId> cycle) {
  auto forward = canonical_rotation(cycle);
  std::vector<VertexId> rev(cycle.rbegin(), cycle.rend());
  auto backward = canonical_rotation(rev);
  return std::min(forward, backward);
}

}  // namespace djc
