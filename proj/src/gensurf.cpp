#include "djc/gensurf.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "djc/random.hpp"

namespace djc {

namespace {

using Cells = std::vector<std::vector<VertexId>>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadParameters, what); }

Generated octahedron() {
  Generated g{Surface::from_cells({{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 2},
                                   {1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 2, 5}}),
              {}};
  g.curves["equator"] = {{2, 3, 4, 5}, true};
  return g;
}

Generated icosahedron() {
  Cells cells;
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    cells.push_back({0, 1 + i, 1 + j});
    cells.push_back({1 + i, 6 + i, 1 + j});
    cells.push_back({1 + j, 6 + i, 6 + j});
    cells.push_back({11, 6 + j, 6 + i});
  }
  Generated g{orient(Surface::from_cells(cells)), {}};
  g.curves["equator"] = {{1, 2, 3, 4, 5}, true};
  g.curves["lower"] = {{6, 7, 8, 9, 10}, true};
  return g;
}

Generated hex_disk(int rings) {
  if (rings < 1 || rings > 50) bad("disk rings must be in [1, 50]");
  const int R = rings;
  auto inside = [&](int q, int r) {
    return std::abs(q) <= R && std::abs(r) <= R && std::abs(q + r) <= R;
  };
  std::map<std::pair<int, int>, VertexId> id;
  // Number rings from the centre outwards so the hub is vertex 0.
  const int dq[6] = {1, 1, 0, -1, -1, 0};
  const int dr[6] = {0, -1, -1, 0, 1, 1};
  std::vector<std::vector<VertexId>> ring_paths(R + 1);
  id[{0, 0}] = 0;
  ring_paths[0] = {0};
  for (int k = 1; k <= R; ++k) {
    int q = -k, r = k;
    for (int d = 0; d < 6; ++d) {
      for (int s = 0; s < k; ++s) {
        VertexId v = static_cast<VertexId>(id.size());
        id[{q, r}] = v;
        ring_paths[k].push_back(v);
        q += dq[d];
        r += dr[d];
      }
    }
  }
  Cells cells;
  for (int q = -R; q <= R; ++q) {
    for (int r = -R; r <= R; ++r) {
      if (inside(q, r) && inside(q + 1, r) && inside(q, r + 1))
        cells.push_back({id[{q, r}], id[{q, r + 1}], id[{q + 1, r}]});
      if (inside(q + 1, r) && inside(q + 1, r + 1) && inside(q, r + 1))
        cells.push_back({id[{q + 1, r}], id[{q, r + 1}], id[{q + 1, r + 1}]});
    }
  }
  Generated g{orient(Surface::from_cells(cells)), {}};
  for (int k = 1; k < R; ++k) g.curves["ring" + std::to_string(k)] = {ring_paths[k], true};
  g.curves["rim"] = {ring_paths[R], true};
  return g;
}

Generated fan(int n) {
  if (n < 3 || n > 4096) bad("fan size must be in [3, 4096]");
  Cells cells;
  Path rim{{}, true};
  for (int i = 0; i < n; ++i) {
    cells.push_back({0, 1 + i, 1 + (i + 1) % n});
    rim.vertices.push_back(1 + i);
  }
  Generated g{Surface::from_cells(cells), {}};
  g.curves["rim"] = rim;
  return g;
}

Generated torus(int m, int n) {
  if (m < 3 || m > 64 || n < 3 || n > 64) bad("torus sizes must be in [3, 64]");
  auto v = [&](int i, int j) { return static_cast<VertexId>(((i + m) % m) * n + (j + n) % n); };
  Cells cells;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      cells.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      cells.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
    }
  }
  Generated g{Surface(m * n, cells), {}};
  Path meridian{{}, true}, longitude{{}, true};
  for (int i = 0; i < m; ++i) meridian.vertices.push_back(v(i, 0));
  for (int j = 0; j < n; ++j) longitude.vertices.push_back(v(0, j));
  g.curves["meridian"] = meridian;
  g.curves["longitude"] = longitude;
  return g;
}

Generated annulus(int cell_count) {
  if (cell_count < 6 || cell_count > 4096 || cell_count % 2 != 0) {
    bad("annulus cells must be even and in [6, 4096]");
  }
  const int k = cell_count / 2;
  Cells cells;
  Path inner{{}, true}, outer{{}, true};
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    cells.push_back({i, j, k + j});
    cells.push_back({i, k + j, k + i});
    inner.vertices.push_back(i);
    outer.vertices.push_back(k + i);
  }
  Generated g{Surface::from_cells(cells), {}};
  g.curves["inner_rim"] = inner;
  g.curves["outer_rim"] = outer;
  return g;
}

Generated moebius() {
  Cells cells;
  for (int i = 0; i < 5; ++i) cells.push_back({i, (i + 1) % 5, (i + 2) % 5});
  return {Surface::from_cells(cells), {}};
}

Generated relabel(const Generated& g, std::uint64_t seed) {
  if (seed == 0) return g;
  Rng rng(seed);
  std::vector<VertexId> perm(g.surface.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  Cells cells = g.surface.cells();
  for (auto& c : cells)
    for (auto& v : c) v = perm[v];
  Generated out{Surface(g.surface.vertex_count(), cells), {}};
  for (const auto& [name, path] : g.curves) {
    Path p = path;
    for (auto& v : p.vertices) v = perm[v];
    out.curves[name] = p;
  }
  return out;
}

}  // namespace

Generated generate(const GenSpec& spec) {
  Generated g;
  switch (spec.kind) {
    case SurfaceKind::Octahedron: g = octahedron(); break;
    case SurfaceKind::Icosahedron: g = icosahedron(); break;
    case SurfaceKind::Disk: g = hex_disk(spec.a); break;
    case SurfaceKind::Fan: g = fan(spec.a); break;
    case SurfaceKind::TorusGrid: g = torus(spec.a, spec.b); break;
    case SurfaceKind::Annulus: g = annulus(spec.a); break;
    case SurfaceKind::Moebius: g = moebius(); break;
  }
  return relabel(g, spec.seed);
}

SurfaceKind parse_kind(const std::string& name) {
  if (name == "octahedron") return SurfaceKind::Octahedron;
  if (name == "icosahedron") return SurfaceKind::Icosahedron;
  if (name == "disk") return SurfaceKind::Disk;
  if (name == "fan") return SurfaceKind::Fan;
  if (name == "torus") return SurfaceKind::TorusGrid;
  if (name == "annulus") return SurfaceKind::Annulus;
  if (name == "moebius") return SurfaceKind::Moebius;
  bad("unknown surface kind '" + name + "'");
}

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Octahedron: return "octahedron";
    case SurfaceKind::Icosahedron: return "icosahedron";
    case SurfaceKind::Disk: return "disk";
    case SurfaceKind::Fan: return "fan";
    case SurfaceKind::TorusGrid: return "torus";
    case SurfaceKind::Annulus: return "annulus";
    case SurfaceKind::Moebius: return "moebius";
  }
  return "unknown";
}

namespace {

// Boundary of a cell cluster as one oriented simple cycle, or empty.
std::vector<VertexId> cluster_boundary(const Surface& s, const std::vector<char>& in) {
  std::map<VertexId, VertexId> next;
  std::size_t edges = 0;
  for (CellId c = 0; c < s.cell_count(); ++c) {
    if (!in[c]) continue;
    auto cv = s.cell(c);
    for (std::size_t i = 0; i < cv.size(); ++i) {
      VertexId u = cv[i], v = cv[(i + 1) % cv.size()];
      int inside = 0;
      for (CellId d : s.cells_of_edge(u, v)) inside += in[d];
      if (inside != 1) continue;
      if (!next.emplace(u, v).second) return {};  // pinched
      ++edges;
    }
  }
  if (edges < 3) return {};
  std::vector<VertexId> cycle{next.begin()->first};
  for (;;) {
    auto it = next.find(cycle.back());
    if (it == next.end()) return {};
    if (it->second == cycle.front()) break;
    cycle.push_back(it->second);
    if (cycle.size() > edges) return {};
  }
  if (cycle.size() != edges) return {};
  return cycle;
}

}  // namespace

Path random_curve(const Surface& surface, std::uint64_t seed, const CurveBounds& bounds) {
  Rng rng(seed);
  std::vector<CellId> allowed;
  std::vector<char> usable(surface.cell_count(), 0);
  for (CellId c = 0; c < surface.cell_count(); ++c) {
    auto cv = surface.cell(c);
    if (std::none_of(cv.begin(), cv.end(), [&](VertexId v) { return surface.is_boundary_vertex(v); })) {
      usable[c] = 1;
      allowed.push_back(c);
    }
  }
  if (!allowed.empty()) {
    const std::int64_t cap = std::min<std::int64_t>(
        static_cast<std::int64_t>(allowed.size()),
        std::max<std::int64_t>(1, static_cast<std::int64_t>(bounds.max_length) * bounds.max_length / 4));
    std::vector<int> vertex_uses(surface.vertex_count(), 0);
    for (int attempt = 0; attempt < bounds.budget; ++attempt) {
      const std::int64_t target = rng.between(1, rng.between(1, cap));
      std::vector<char> in(surface.cell_count(), 0);
      std::fill(vertex_uses.begin(), vertex_uses.end(), 0);
      std::set<CellId> frontier;
      std::int64_t size = 0;
      auto add = [&](CellId c) {
        in[c] = 1;
        ++size;
        frontier.erase(c);
        auto cv = surface.cell(c);
        for (std::size_t i = 0; i < cv.size(); ++i) {
          ++vertex_uses[cv[i]];
          for (CellId d : surface.cells_of_edge(cv[i], cv[(i + 1) % cv.size()]))
            if (usable[d] && !in[d]) frontier.insert(d);
        }
      };
      // A cell keeps the cluster a disk if it meets the cluster in one
      // contiguous run of shared edges and nowhere else.
      auto keeps_disk = [&](CellId d) {
        auto cv = surface.cell(d);
        const std::size_t k = cv.size();
        std::vector<char> shared(k, 0);
        std::size_t shared_count = 0, touching = 0, starts = 0;
        for (std::size_t i = 0; i < k; ++i) {
          for (CellId e : surface.cells_of_edge(cv[i], cv[(i + 1) % k]))
            if (e != d && in[e]) shared[i] = 1;
          shared_count += shared[i];
          touching += vertex_uses[cv[i]] > 0;
        }
        for (std::size_t i = 0; i < k; ++i) starts += shared[i] && !shared[(i + k - 1) % k];
        return shared_count >= 1 && shared_count < k && starts == 1 && touching == shared_count + 1;
      };
      add(allowed[rng.below(allowed.size())]);
      std::vector<CellId> options;
      while (size < target) {
        options.clear();
        for (CellId d : frontier)
          if (keeps_disk(d)) options.push_back(d);
        if (options.empty()) break;
        add(options[rng.below(options.size())]);
      }
      // Fill notches: outside cells whose vertices all lie on the cluster.
      for (bool changed = true; changed;) {
        changed = false;
        for (CellId d : std::vector<CellId>(frontier.begin(), frontier.end())) {
          auto cv = surface.cell(d);
          if (std::all_of(cv.begin(), cv.end(), [&](VertexId v) { return vertex_uses[v] > 0; }) &&
              keeps_disk(d)) {
            add(d);
            changed = true;
          }
        }
      }
      auto cycle = cluster_boundary(surface, in);
      const int len = static_cast<int>(cycle.size());
      if (len < std::max(3, bounds.min_length) || len > bounds.max_length) continue;
      Path p{cycle, true};
      if (classify(surface, p) == CurveClass::DiscreteCurve) return p;
    }
  }
  throw Error(ErrorCode::BudgetExhausted, "no discrete curve found within the attempt budget");
}

}  // namespace djc
