#include "djc/variation.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <set>

namespace djc {

std::vector<Edge> xor_edges(std::vector<Edge> a, std::vector<Edge> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Edge> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Edge> xor_sum(const Path& a, const Path& b) { return xor_edges(a.edges(), b.edges()); }

std::vector<Edge> boundary_sum(const Surface& surface, const std::vector<CellId>& cells) {
  std::vector<Edge> all;
  for (CellId c : cells) {
    auto cv = surface.cell(c);
    for (std::size_t i = 0; i < cv.size(); ++i) all.emplace_back(cv[i], cv[(i + 1) % cv.size()]);
  }
  std::sort(all.begin(), all.end());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(all[i]);
    i = j;
  }
  return out;
}

namespace {

std::vector<Edge> cell_edges(const Surface& s, CellId c) {
  auto cv = s.cell(c);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cv.size(); ++i) out.emplace_back(cv[i], cv[(i + 1) % cv.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

// Repeatedly cancels the smallest remaining edge with the unused incident
// candidate that removes the most remaining edges.
bool peel(const Surface& s, const std::vector<CellId>& candidates, std::vector<Edge> target,
          std::vector<CellId>& used) {
  std::set<CellId> pool(candidates.begin(), candidates.end());
  while (!target.empty()) {
    const Edge e = target.front();
    CellId best = -1;
    long best_gain = LONG_MIN;
    for (CellId c : s.cells_of_edge(e.a, e.b)) {
      if (!pool.count(c)) continue;
      auto ce = cell_edges(s, c);
      long hit = 0;
      for (const Edge& x : ce) hit += std::binary_search(target.begin(), target.end(), x);
      long gain = 2 * hit - static_cast<long>(ce.size());
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best < 0) return false;
    pool.erase(best);
    used.push_back(best);
    target = xor_edges(std::move(target), cell_edges(s, best));
  }
  return true;
}

// Gaussian elimination over GF(2): cells are unknowns, edges are equations.
bool eliminate(const Surface& s, const std::vector<CellId>& candidates, const std::vector<Edge>& target,
               std::vector<CellId>& used) {
  const std::size_t n = candidates.size();
  std::vector<Edge> rows_edges = target;
  for (CellId c : candidates) {
    auto ce = cell_edges(s, c);
    rows_edges.insert(rows_edges.end(), ce.begin(), ce.end());
  }
  std::sort(rows_edges.begin(), rows_edges.end());
  rows_edges.erase(std::unique(rows_edges.begin(), rows_edges.end()), rows_edges.end());
  const std::size_t words = (n + 1 + 63) / 64;  // last column is the right-hand side
  std::vector<std::vector<std::uint64_t>> rows(rows_edges.size(), std::vector<std::uint64_t>(words, 0));
  auto set_bit = [&](std::vector<std::uint64_t>& r, std::size_t k) { r[k / 64] ^= std::uint64_t{1} << (k % 64); };
  auto get_bit = [&](const std::vector<std::uint64_t>& r, std::size_t k) { return (r[k / 64] >> (k % 64)) & 1; };
  auto row_of = [&](const Edge& e) {
    return std::lower_bound(rows_edges.begin(), rows_edges.end(), e) - rows_edges.begin();
  };
  for (std::size_t k = 0; k < n; ++k)
    for (const Edge& e : cell_edges(s, candidates[k])) set_bit(rows[row_of(e)], k);
  for (const Edge& e : target) set_bit(rows[row_of(e)], n);

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && !get_bit(rows[p], col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && get_bit(rows[i], col))
        for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[r][w];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (get_bit(rows[i], n)) return false;
  for (std::size_t i = 0; i < r; ++i)
    if (get_bit(rows[i], n)) used.push_back(candidates[pivot_col[i]]);
  return true;
}

}  // namespace

VariationResult is_gradually_varied(const Surface& surface, const Path& a, const Path& b) {
  VariationResult result;
  std::vector<Edge> target = xor_sum(a, b);
  if (target.empty()) {
    result.varied = true;
    return result;
  }
  std::vector<VertexId> verts = a.vertices;
  verts.insert(verts.end(), b.vertices.begin(), b.vertices.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<CellId> candidates;
  for (VertexId v : verts) {
    if (!surface.contains_vertex(v)) return result;
    for (CellId c : surface.cells_of_vertex(v)) {
      auto cv = surface.cell(c);
      if (*std::min_element(cv.begin(), cv.end()) != v) continue;
      if (std::all_of(cv.begin(), cv.end(),
                      [&](VertexId w) { return std::binary_search(verts.begin(), verts.end(), w); }))
        candidates.push_back(c);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  for (CellId c : candidates) {
    if (cell_edges(surface, c) == target) {
      result.varied = true;
      result.witness = {c};
      return result;
    }
  }
  std::vector<CellId> used;
  if (peel(surface, candidates, target, used) || (used.clear(), eliminate(surface, candidates, target, used))) {
    std::sort(used.begin(), used.end());
    result.varied = true;
    result.witness = std::move(used);
  }
  return result;
}

namespace {

constexpr VertexId kVirtual = -1;

// +1 if w lies on the ring strictly between `prev` and `next` going forward,
// -1 if strictly between `next` and `prev`.
int side_of(const std::vector<VertexId>& ring, VertexId prev, VertexId next, VertexId w) {
  const int n = static_cast<int>(ring.size());
  auto pos = [&](VertexId v) {
    auto it = std::find(ring.begin(), ring.end(), v);
    return it == ring.end() ? -1 : static_cast<int>(it - ring.begin());
  };
  const int ip = pos(prev), in = pos(next), iw = pos(w);
  if (ip < 0 || in < 0 || iw < 0) {
    throw Error(ErrorCode::IrregularSharedVertex, "neighbour missing from the link");
  }
  const int to_w = ((iw - ip) % n + n) % n;
  const int to_next = ((in - ip) % n + n) % n;
  return to_w < to_next ? +1 : -1;
}

std::vector<VertexId> closed_ring(const Surface& s, VertexId v) {
  try {
    VertexLink link = vertex_link(s, v);
    if (!link.closed) link.ring.push_back(kVirtual);
    return link.ring;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IrregularVertex) {
      throw Error(ErrorCode::IrregularSharedVertex, "shared vertex " + std::to_string(v));
    }
    throw;
  }
}

}  // namespace

CrossResult crosses_over(const Surface& surface, const Path& a, const Path& b) {
  require_simple_path(surface, a);
  require_simple_path(surface, b);
  CrossResult result;
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  if (na == 0 || nb == 0) return result;
  auto a_index = [&](VertexId v) { return index_of(a, v); };
  std::set<Edge> a_edges;
  for (const Edge& e : a.edges()) a_edges.insert(e);

  // Index i of b is a run start if b[i] is on a and the b-edge into it is not an a-edge.
  auto in_a = [&](int i) { return a_index(b.vertices[i]) >= 0; };
  auto b_at = [&](int i) { return b.vertices[((i % nb) + nb) % nb]; };
  auto b_edge_in_a = [&](int i) {  // edge b[i] -> b[i+1]
    if (!b.closed && i + 1 >= nb) return false;
    return a_edges.count(Edge(b_at(i), b_at(i + 1))) > 0;
  };

  std::vector<char> start(nb, 0);
  bool any_start = false;
  for (int i = 0; i < nb; ++i) {
    if (!in_a(i)) continue;
    const bool continues = (b.closed || i > 0) && b_edge_in_a(i - 1);
    if (!continues) {
      start[i] = 1;
      any_start = true;
    }
  }
  if (!any_start) return result;  // disjoint, or b runs entirely along a

  auto a_neighbors = [&](int ia) -> std::pair<VertexId, VertexId> {
    if (!a.closed && (ia == 0 || ia == na - 1)) return {kVirtual, kVirtual};
    return {a.vertices[(ia - 1 + na) % na], a.vertices[(ia + 1) % na]};
  };

  for (int i = 0; i < nb; ++i) {
    if (!start[i]) continue;
    int j = i;
    int steps = 0;
    while (b_edge_in_a(j) && steps < nb) {
      ++j;
      ++steps;
    }
    const bool has_entry = b.closed || i > 0;
    const bool has_exit = b.closed || j < nb - 1;
    if (!has_entry || !has_exit) continue;
    const VertexId p = b_at(i), q = b_at(j);
    const VertexId entry = b_at(i - 1), exit = b_at(j + 1);
    auto [pp, pn] = a_neighbors(a_index(p));
    auto [qp, qn] = a_neighbors(a_index(q));
    if (pp == kVirtual || qp == kVirtual) continue;  // a path endpoint cannot be crossed
    const int s_in = side_of(closed_ring(surface, p), pp, pn, entry);
    const int s_out = side_of(closed_ring(surface, q), qp, qn, exit);
    if (s_in != s_out) result.sites.emplace_back(p, q);
  }
  result.crosses = !result.sites.empty();
  return result;
}

bool is_side_gradually_varied(const Surface& surface, const Path& a, const Path& b) {
  return is_gradually_varied(surface, a, b).varied && !crosses_over(surface, a, b).crosses;
}

}  // namespace djc
