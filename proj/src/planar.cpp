#include "djc/planar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "djc/error.hpp"

namespace djc {

namespace {

Rational centroid_coord(const Rational& a, const Rational& b, const Rational& c) {
  Rational s = a + b + c;
  s /= 3;
  return s;
}

Point2 midpoint(const Point2& a, const Point2& b) {
  Point2 m{a.x + b.x, a.y + b.y};
  m.x /= 2;
  m.y /= 2;
  return m;
}

Rational dot(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  return (b.x - a.x) * (d.x - c.x) + (b.y - a.y) * (d.y - c.y);
}

// Twice the signed area of a cell in the plane.
Rational signed_area2(const EmbeddedComplex& ec, std::span<const VertexId> cell) {
  Rational s = 0;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    const Point2& a = ec.coords[cell[i]];
    const Point2& b = ec.coords[cell[(i + 1) % cell.size()]];
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

std::uint64_t edge_key(int u, int v) { return Edge(u, v).key(); }

// Mutable triangle soup used while inserting the polygon.
class Mesh {
 public:
  explicit Mesh(const EmbeddedComplex& ec) {
    for (int v = 0; v < ec.surface.vertex_count(); ++v) add_point(ec.coords[v], ec.provenance[v]);
    for (CellId c = 0; c < ec.surface.cell_count(); ++c) {
      auto cell = ec.surface.cell(c);
      if (cell.size() != 3) throw Error(ErrorCode::BadParameters, "lattice cells must be triangles");
      add_tri(cell[0], cell[1], cell[2]);
    }
  }

  int add_point(const Point2& p, const Provenance& prov) {
    pts.push_back(p);
    px.push_back(p.x.get_d());
    py.push_back(p.y.get_d());
    this->prov.push_back(prov);
    return static_cast<int>(pts.size()) - 1;
  }

  int add_tri(int a, int b, int c) {
    const int t = static_cast<int>(tris.size());
    tris.push_back({a, b, c});
    alive.push_back(1);
    for (int i = 0; i < 3; ++i) edge_tris[edge_key(tris[t][i], tris[t][(i + 1) % 3])].push_back(t);
    return t;
  }

  void kill(int t) {
    alive[t] = 0;
    for (int i = 0; i < 3; ++i) {
      auto it = edge_tris.find(edge_key(tris[t][i], tris[t][(i + 1) % 3]));
      auto& list = it->second;
      list.erase(std::find(list.begin(), list.end(), t));
      if (list.empty()) edge_tris.erase(it);
    }
  }

  void split_edge(int u, int v, int m) {
    auto it = edge_tris.find(edge_key(u, v));
    if (it == edge_tris.end()) return;
    const std::vector<int> around = it->second;
    for (int t : around) {
      const auto tri = tris[t];
      int i = 0;
      while (!((tri[i] == u && tri[(i + 1) % 3] == v) || (tri[i] == v && tri[(i + 1) % 3] == u))) ++i;
      const int a = tri[i], b = tri[(i + 1) % 3], c = tri[(i + 2) % 3];
      kill(t);
      add_tri(a, m, c);
      add_tri(m, b, c);
    }
  }

  void split_tri(int t, int m) {
    const auto tri = tris[t];
    kill(t);
    add_tri(tri[0], tri[1], m);
    add_tri(tri[1], tri[2], m);
    add_tri(tri[2], tri[0], m);
  }

  bool bbox_may_contain(int t, double x, double y) const {
    const auto& tri = tris[t];
    double lo_x = px[tri[0]], hi_x = lo_x, lo_y = py[tri[0]], hi_y = lo_y;
    for (int i = 1; i < 3; ++i) {
      lo_x = std::min(lo_x, px[tri[i]]);
      hi_x = std::max(hi_x, px[tri[i]]);
      lo_y = std::min(lo_y, py[tri[i]]);
      hi_y = std::max(hi_y, py[tri[i]]);
    }
    const double slack = 1e-7 * (1.0 + std::abs(lo_x) + std::abs(hi_x) + std::abs(lo_y) + std::abs(hi_y));
    return x >= lo_x - slack && x <= hi_x + slack && y >= lo_y - slack && y <= hi_y + slack;
  }

  // Alive triangles whose closed region contains q.
  std::vector<int> containing(const Point2& q) const {
    std::vector<int> out;
    const double x = q.x.get_d(), y = q.y.get_d();
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!alive[t] || !bbox_may_contain(t, x, y)) continue;
      const auto& tri = tris[t];
      if (orientation(pts[tri[0]], pts[tri[1]], q) >= 0 && orientation(pts[tri[1]], pts[tri[2]], q) >= 0 &&
          orientation(pts[tri[2]], pts[tri[0]], q) >= 0)
        out.push_back(t);
    }
    return out;
  }

  // Mesh edges crossing the open segment ab at a point interior to both,
  // sorted by edge key.
  std::vector<std::pair<Edge, Point2>> crossings(const Point2& a, const Point2& b) const {
    const double ax = a.x.get_d(), ay = a.y.get_d(), bx = b.x.get_d(), by = b.y.get_d();
    const double slack = 1e-7 * (1.0 + std::abs(ax) + std::abs(ay) + std::abs(bx) + std::abs(by));
    const double lo_x = std::min(ax, bx) - slack, hi_x = std::max(ax, bx) + slack;
    const double lo_y = std::min(ay, by) - slack, hi_y = std::max(ay, by) + slack;
    std::vector<std::pair<Edge, Point2>> out;
    for (const auto& [key, list] : edge_tris) {
      const int u = static_cast<int>(key >> 32), v = static_cast<int>(key & 0xffffffffu);
      if (std::max(px[u], px[v]) < lo_x || std::min(px[u], px[v]) > hi_x) continue;
      if (std::max(py[u], py[v]) < lo_y || std::min(py[u], py[v]) > hi_y) continue;
      Point2 at;
      if (proper_intersection(a, b, pts[u], pts[v], &at)) out.emplace_back(Edge(u, v), std::move(at));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  }

  // Vertices on the closed segment ab ordered from a to b.
  std::vector<int> on_segment_sorted(const Point2& a, const Point2& b) const {
    const double ax = a.x.get_d(), ay = a.y.get_d(), bx = b.x.get_d(), by = b.y.get_d();
    const double slack = 1e-7 * (1.0 + std::abs(ax) + std::abs(ay) + std::abs(bx) + std::abs(by));
    std::vector<std::pair<Rational, int>> found;
    for (int v = 0; v < static_cast<int>(pts.size()); ++v) {
      if (px[v] < std::min(ax, bx) - slack || px[v] > std::max(ax, bx) + slack) continue;
      if (py[v] < std::min(ay, by) - slack || py[v] > std::max(ay, by) + slack) continue;
      if (on_segment(pts[v], a, b)) found.emplace_back(dot(a, pts[v], a, b), v);
    }
    std::sort(found.begin(), found.end());
    std::vector<int> out;
    for (auto& f : found) out.push_back(f.second);
    return out;
  }

  EmbeddedComplex finish() const {
    std::vector<std::vector<VertexId>> cells;
    for (std::size_t t = 0; t < tris.size(); ++t)
      if (alive[t]) cells.push_back({tris[t][0], tris[t][1], tris[t][2]});
    EmbeddedComplex ec;
    ec.surface = Surface(static_cast<int>(pts.size()), std::move(cells));
    ec.coords = pts;
    ec.provenance = prov;
    return ec;
  }

  std::vector<Point2> pts;
  std::vector<double> px, py;
  std::vector<Provenance> prov;
  std::vector<std::array<int, 3>> tris;
  std::vector<char> alive;
  std::unordered_map<std::uint64_t, std::vector<int>> edge_tris;
};

Rational ceil_div(const Rational& a, const Rational& b) {
  Rational q = a / b;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

mpz_class floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Point of the polyline at parameter t.
Point2 curve_at(const PolylineCurve& curve, const Rational& t) {
  const int n = static_cast<int>(curve.points.size());
  const int segs = curve.closed ? n : n - 1;
  Rational s = t * segs;
  long k = floor_of(s).get_si();
  if (k >= segs) k = segs - 1;
  Rational lambda = s - k;
  const Point2& a = curve.points[k];
  const Point2& b = curve.points[(k + 1) % n];
  return Point2{a.x + lambda * (b.x - a.x), a.y + lambda * (b.y - a.y)};
}

}  // namespace

std::string_view to_string(Side side) {
  switch (side) {
    case Side::Inside: return "inside";
    case Side::Outside: return "outside";
    case Side::OnCurve: return "on-curve";
  }
  return "?";
}

EmbeddedComplex lattice(const Rational& edge_length, const BBox& bbox) {
  if (edge_length <= 0) throw Error(ErrorCode::BadParameters, "edge length must be positive");
  if (bbox.hi.x <= bbox.lo.x || bbox.hi.y <= bbox.lo.y)
    throw Error(ErrorCode::DegenerateBBox, "bbox has no area");
  const Rational& h = edge_length;
  const long nx = ceil_div(bbox.hi.x - bbox.lo.x, h).get_num().get_si();
  const long ny = ceil_div(bbox.hi.y - bbox.lo.y, h).get_num().get_si();
  if ((nx + 2) * (ny + 1) > 50'000'000) throw Error(ErrorCode::BadParameters, "lattice too large");
  const long row = nx + 2;
  EmbeddedComplex ec;
  ec.coords.reserve(static_cast<std::size_t>(row * (ny + 1)));
  const Rational half(1, 2);
  for (long j = 0; j <= ny; ++j) {
    for (long i = -1; i <= nx; ++i) {
      Rational off = (j % 2) ? Rational(i) + half : Rational(i);
      ec.coords.push_back(Point2{bbox.lo.x + off * h, bbox.lo.y + Rational(j) * h});
      ec.provenance.push_back({VertexOrigin::LatticePoint, -1, -1});
    }
  }
  auto id = [&](long i, long j) { return static_cast<VertexId>(j * row + (i + 1)); };
  std::vector<std::vector<VertexId>> cells;
  for (long j = 0; j < ny; ++j) {
    for (long i = -1; i < nx; ++i) {
      if (j % 2 == 0) {
        cells.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
        cells.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
      } else {
        cells.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      }
    }
  }
  ec.surface = Surface(static_cast<int>(ec.coords.size()), std::move(cells));
  return ec;
}

bool is_simple_polygon(const std::vector<Point2>& polygon) {
  const int n = static_cast<int>(polygon.size());
  if (n < 3) return false;
  std::vector<Point2> sorted = polygon;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < n; ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % n];
    for (int j = i + 1; j < n; ++j) {
      const Point2& c = polygon[j];
      const Point2& d = polygon[(j + 1) % n];
      if (j == i + 1) {
        // consecutive edges a-b, b-d: only b in common
        if (orientation(a, b, d) == 0 && (on_segment(d, a, b) || on_segment(a, b, d))) return false;
      } else if (i == 0 && j == n - 1) {
        // edges c-a and a-b
        if (orientation(c, a, b) == 0 && (on_segment(c, a, b) || on_segment(b, c, a))) return false;
      } else if (segments_touch(a, b, c, d)) {
        return false;
      }
    }
  }
  return true;
}

Rational min_vertex_distance_sq(const std::vector<Point2>& polygon) {
  Rational best = -1;
  for (std::size_t i = 0; i < polygon.size(); ++i)
    for (std::size_t j = i + 1; j < polygon.size(); ++j) {
      Rational d = squared_distance(polygon[i], polygon[j]);
      if (best < 0 || d < best) best = d;
    }
  return best < 0 ? Rational(0) : best;
}

Rational diameter_sq(const std::vector<Point2>& polygon) {
  Rational best = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i)
    for (std::size_t j = i + 1; j < polygon.size(); ++j) best = std::max(best, squared_distance(polygon[i], polygon[j]));
  return best;
}

EmbedConfig resolve_config(const std::vector<Point2>& polygon, const EmbedConfig& config) {
  if (!is_simple_polygon(polygon)) throw Error(ErrorCode::NotSimplePolygon, "polygon is not simple");
  if (config.widen_rounds < 2) throw Error(ErrorCode::BadParameters, "widen_rounds must be at least 2");
  if (config.isolate_rounds < 0) throw Error(ErrorCode::BadParameters, "isolate_rounds must be non-negative");
  EmbedConfig out = config;
  const Rational d0sq = min_vertex_distance_sq(polygon);
  if (config.edge_length) {
    const Rational& h = *config.edge_length;
    if (h <= 0) throw Error(ErrorCode::BadParameters, "edge_length must be positive");
    if (9 * h * h > d0sq)
      throw Error(ErrorCode::LatticeTooCoarse,
                  "edge_length " + format_rational(h) + " exceeds d0/3 (d0^2 = " + format_rational(d0sq) + ")");
  } else {
    // r <= d0 on a dyadic grid fine enough to keep at least 64 steps.
    const double d0 = std::sqrt(d0sq.get_d());
    long scale = 1024;
    while (d0 * static_cast<double>(scale) < 64.0 && scale < (1L << 40)) scale *= 2;
    Rational r(static_cast<long>(std::floor(d0 * static_cast<double>(scale))), scale);
    r.canonicalize();
    while (r > 0 && r * r > d0sq) r -= Rational(1, scale);
    if (r <= 0) throw Error(ErrorCode::BadParameters, "polygon vertices too close");
    out.edge_length = r / 3;
  }
  const Rational diam = diameter_sq(polygon);
  if (config.margin) {
    if (*config.margin * *config.margin <= diam)
      throw Error(ErrorCode::BadParameters, "margin must exceed the polygon diameter");
  } else {
    mpz_class m(static_cast<long>(std::floor(std::sqrt(diam.get_d()))));
    while (Rational(m * m) <= diam) ++m;
    out.margin = Rational(m);
  }
  return out;
}

BBox embedding_bbox(const std::vector<Point2>& polygon, const Rational& margin) {
  BBox b{polygon.at(0), polygon.at(0)};
  for (const auto& p : polygon) {
    b.lo.x = std::min(b.lo.x, p.x);
    b.lo.y = std::min(b.lo.y, p.y);
    b.hi.x = std::max(b.hi.x, p.x);
    b.hi.y = std::max(b.hi.y, p.y);
  }
  b.lo.x -= margin;
  b.lo.y -= margin;
  b.hi.x += margin;
  b.hi.y += margin;
  return b;
}

EmbedResult embed_polygon(const EmbeddedComplex& lat, const std::vector<Point2>& polygon) {
  if (!is_simple_polygon(polygon)) throw Error(ErrorCode::NotSimplePolygon, "polygon is not simple");
  Mesh mesh(lat);
  const int n = static_cast<int>(polygon.size());

  std::vector<std::vector<int>> holders(n);
  std::map<int, int> holder_of;
  for (int k = 0; k < n; ++k) {
    holders[k] = mesh.containing(polygon[k]);
    if (holders[k].empty())
      throw Error(ErrorCode::BadParameters, "polygon vertex " + std::to_string(k) + " lies outside the lattice");
    for (int t : holders[k]) {
      auto [it, fresh] = holder_of.emplace(t, k);
      if (!fresh)
        throw Error(ErrorCode::LatticeTooCoarse, "polygon vertices " + std::to_string(it->second) + " and " +
                                                     std::to_string(k) + " share a cell");
    }
  }

  std::vector<int> corner(n);
  for (int k = 0; k < n; ++k) {
    const Point2& q = polygon[k];
    const int t = mesh.containing(q).front();
    const auto tri = mesh.tris[t];
    int at_vertex = -1;
    for (int v : tri)
      if (mesh.pts[v] == q) at_vertex = v;
    if (at_vertex >= 0) {
      mesh.prov[at_vertex] = {VertexOrigin::Original, k, -1};
      corner[k] = at_vertex;
      continue;
    }
    const int m = mesh.add_point(q, {VertexOrigin::Original, k, -1});
    corner[k] = m;
    int on_edge = -1;
    for (int i = 0; i < 3; ++i)
      if (orientation(mesh.pts[tri[i]], mesh.pts[tri[(i + 1) % 3]], q) == 0) on_edge = i;
    if (on_edge >= 0)
      mesh.split_edge(tri[on_edge], tri[(on_edge + 1) % 3], m);
    else
      mesh.split_tri(t, m);
  }

  EmbedResult result;
  for (int pass = 0; pass < 64; ++pass) {
    long measure = 0;
    for (int k = 0; k < n; ++k) measure += static_cast<long>(mesh.crossings(polygon[k], polygon[(k + 1) % n]).size());
    result.measure_history.push_back(measure);
    if (measure == 0) break;
    for (int k = 0; k < n; ++k) {
      for (auto& [e, at] : mesh.crossings(polygon[k], polygon[(k + 1) % n])) {
        if (!mesh.edge_tris.count(e.key())) continue;
        const int m = mesh.add_point(at, {VertexOrigin::SnapPoint, e.a, e.b});
        mesh.split_edge(e.a, e.b, m);
      }
    }
  }
  if (result.measure_history.back() != 0)
    throw Error(ErrorCode::LatticeTooCoarse, "polygon snapping did not reach a fixpoint");

  std::vector<VertexId> cycle;
  for (int k = 0; k < n; ++k) {
    auto run = mesh.on_segment_sorted(polygon[k], polygon[(k + 1) % n]);
    cycle.insert(cycle.end(), run.begin(), run.end() - 1);
  }
  result.complex = mesh.finish();
  result.curve = Path{cycle, true};
  require_simple_path(result.complex.surface, result.curve);
  return result;
}

EmbeddedComplex widen_angles(const EmbeddedComplex& embedded, int rounds) {
  EmbeddedComplex cur = embedded;
  for (int r = 0; r < rounds; ++r) {
    const Surface& s = cur.surface;
    const int v0 = s.vertex_count();
    std::vector<std::vector<VertexId>> cells;
    cells.reserve(static_cast<std::size_t>(s.cell_count()) * 3);
    EmbeddedComplex next;
    next.coords = std::move(cur.coords);
    next.provenance = std::move(cur.provenance);
    next.coords.reserve(next.coords.size() + s.cell_count());
    for (CellId c = 0; c < s.cell_count(); ++c) {
      auto cell = s.cell(c);
      if (cell.size() != 3) throw Error(ErrorCode::BadParameters, "widen_angles needs triangles");
      const Point2 &a = next.coords[cell[0]], &b = next.coords[cell[1]], &d = next.coords[cell[2]];
      Point2 centre{centroid_coord(a.x, b.x, d.x), centroid_coord(a.y, b.y, d.y)};
      next.coords.push_back(std::move(centre));
      next.provenance.push_back({VertexOrigin::VeblenFace, c, -1});
      const VertexId g = v0 + c;
      cells.push_back({cell[0], cell[1], g});
      cells.push_back({cell[1], cell[2], g});
      cells.push_back({cell[2], cell[0], g});
    }
    next.surface = Surface(v0 + s.cell_count(), std::move(cells));
    cur = std::move(next);
  }
  return cur;
}

EmbeddedComplex isolate_curve(const EmbeddedComplex& embedded, const Path& curve, int rounds) {
  EmbeddedComplex cur = embedded;
  for (int r = 0; r < rounds; ++r) {
    const Surface& s = cur.surface;
    std::vector<char> on_curve(s.vertex_count(), 0);
    for (VertexId v : curve.vertices) on_curve[v] = 1;
    std::unordered_set<std::uint64_t> curve_edges;
    for (const Edge& e : curve.edges()) curve_edges.insert(e.key());

    std::vector<char> touching(s.cell_count(), 0);
    for (VertexId v : curve.vertices)
      for (CellId c : s.cells_of_vertex(v)) touching[c] = 1;

    EmbeddedComplex next;
    next.coords = std::move(cur.coords);
    next.provenance = std::move(cur.provenance);
    std::vector<VertexId> face_point(s.cell_count(), -1);
    for (CellId c = 0; c < s.cell_count(); ++c) {
      if (!touching[c]) continue;
      auto cell = s.cell(c);
      Point2 g{0, 0};
      for (VertexId v : cell) {
        g.x += next.coords[v].x;
        g.y += next.coords[v].y;
      }
      g.x /= static_cast<long>(cell.size());
      g.y /= static_cast<long>(cell.size());
      face_point[c] = static_cast<VertexId>(next.coords.size());
      next.coords.push_back(std::move(g));
      next.provenance.push_back({VertexOrigin::VeblenFace, c, -1});
    }
    std::unordered_map<std::uint64_t, VertexId> edge_point;
    for (const Edge& e : s.edges()) {
      if (!(on_curve[e.a] || on_curve[e.b]) || curve_edges.count(e.key())) continue;
      edge_point[e.key()] = static_cast<VertexId>(next.coords.size());
      Point2 m = midpoint(next.coords[e.a], next.coords[e.b]);
      next.coords.push_back(std::move(m));
      next.provenance.push_back({VertexOrigin::VeblenEdge, e.a, e.b});
    }
    std::vector<std::vector<VertexId>> cells;
    for (CellId c = 0; c < s.cell_count(); ++c) {
      auto cell = s.cell(c);
      if (!touching[c]) {
        cells.emplace_back(cell.begin(), cell.end());
        continue;
      }
      std::vector<VertexId> ring;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        const VertexId a = cell[i], b = cell[(i + 1) % cell.size()];
        ring.push_back(a);
        if (auto it = edge_point.find(edge_key(a, b)); it != edge_point.end()) ring.push_back(it->second);
      }
      for (std::size_t i = 0; i < ring.size(); ++i) cells.push_back({ring[i], ring[(i + 1) % ring.size()], face_point[c]});
    }
    next.surface = Surface(static_cast<int>(next.coords.size()), std::move(cells));
    cur = std::move(next);
  }
  return cur;
}

EmbedResult embed(const std::vector<Point2>& polygon, const EmbedConfig& config) {
  const EmbedConfig cfg = resolve_config(polygon, config);
  EmbedResult r = embed_polygon(lattice(*cfg.edge_length, embedding_bbox(polygon, *cfg.margin)), polygon);
  r.complex = isolate_curve(widen_angles(r.complex, cfg.widen_rounds), r.curve, cfg.isolate_rounds);
  return r;
}

Subdivision midpoint_subdivide(const EmbeddedComplex& embedded, const PolylineCurve& curve, int levels) {
  if (levels < 0) throw Error(ErrorCode::BadParameters, "levels must be non-negative");
  const Surface& s0 = embedded.surface;
  for (CellId c = 0; c < s0.cell_count(); ++c)
    if (s0.cell(c).size() != 3) throw Error(ErrorCode::BadParameters, "midpoint subdivision needs triangles");
  const int n = static_cast<int>(curve.points.size());
  if (n == 1) throw Error(ErrorCode::BadParameters, "curve needs at least two points");
  const int segs = n == 0 ? 0 : (curve.closed ? n : n - 1);

  // Parameters of the mesh vertices on the curve.
  std::vector<std::pair<Rational, VertexId>> on;
  for (VertexId v = 0; v < s0.vertex_count(); ++v) {
    for (int k = 0; k < segs; ++k) {
      const Point2& a = curve.points[k];
      const Point2& b = curve.points[(k + 1) % n];
      if (!on_segment(embedded.coords[v], a, b)) continue;
      Rational lambda = dot(a, embedded.coords[v], a, b) / dot(a, b, a, b);
      Rational t = (Rational(k) + lambda) / segs;
      if (curve.closed && t == 1) t = 0;
      on.emplace_back(t, v);
      break;
    }
  }
  std::sort(on.begin(), on.end());
  Subdivision out;
  out.complex = embedded;
  std::vector<Rational> params;
  for (auto& [t, v] : on) {
    out.boundary_path.vertices.push_back(v);
    params.push_back(t);
  }
  out.boundary_path.closed = curve.closed && segs > 0;
  if (segs > 0) {
    if (on.size() < 2) throw Error(ErrorCode::NotAPath, "fewer than two mesh vertices on the curve");
    require_simple_path(s0, out.boundary_path);
  }

  for (int level = 0; level < levels; ++level) {
    const Surface& s = out.complex.surface;
    const auto& bc = out.boundary_path.vertices;
    const std::size_t bn = bc.size();
    const std::size_t bedges = bn == 0 ? 0 : (out.boundary_path.closed ? bn : bn - 1);
    std::unordered_map<std::uint64_t, std::size_t> bc_edge;  // edge -> index along B_C
    for (std::size_t i = 0; i < bedges; ++i) bc_edge[edge_key(bc[i], bc[(i + 1) % bn])] = i;

    for (CellId c = 0; c < s.cell_count(); ++c) {
      auto cell = s.cell(c);
      int hits = 0;
      for (int i = 0; i < 3; ++i) hits += bc_edge.count(edge_key(cell[i], cell[(i + 1) % 3])) ? 1 : 0;
      if (hits > 1)
        throw Error(ErrorCode::CurveTriangleMultiCross, "cell " + std::to_string(c) + " meets the curve in several arcs");
    }

    EmbeddedComplex next;
    next.coords = out.complex.coords;
    next.provenance = out.complex.provenance;
    const VertexId v0 = s.vertex_count();
    std::vector<Rational> mid_param(bedges);
    for (int e = 0; e < s.edge_count(); ++e) {
      const Edge& ed = s.edges()[e];
      auto it = bc_edge.find(ed.key());
      if (it == bc_edge.end()) {
        next.coords.push_back(midpoint(out.complex.coords[ed.a], out.complex.coords[ed.b]));
      } else {
        const std::size_t i = it->second;
        Rational t0 = params[i];
        Rational t1 = (i + 1 < bn) ? params[i + 1] : Rational(1) + params[0];
        Rational tm = (t0 + t1) / 2;
        if (tm >= 1 && out.boundary_path.closed) tm -= 1;
        mid_param[i] = tm;
        next.coords.push_back(curve_at(curve, tm));
      }
      next.provenance.push_back({VertexOrigin::VeblenEdge, ed.a, ed.b});
    }
    std::vector<std::vector<VertexId>> cells;
    cells.reserve(static_cast<std::size_t>(s.cell_count()) * 4);
    for (CellId c = 0; c < s.cell_count(); ++c) {
      auto t = s.cell(c);
      const VertexId mab = v0 + s.edge_index(t[0], t[1]);
      const VertexId mbc = v0 + s.edge_index(t[1], t[2]);
      const VertexId mca = v0 + s.edge_index(t[2], t[0]);
      cells.push_back({t[0], mab, mca});
      cells.push_back({mab, t[1], mbc});
      cells.push_back({mca, mbc, t[2]});
      cells.push_back({mab, mbc, mca});
    }
    next.surface = Surface(static_cast<int>(next.coords.size()), std::move(cells));
    for (CellId c = 0; c < next.surface.cell_count(); ++c)
      if (signed_area2(next, next.surface.cell(c)) <= 0)
        throw Error(ErrorCode::InvertedCell, "cell " + std::to_string(c) + " lost its orientation");

    Path refined{{}, out.boundary_path.closed};
    std::vector<Rational> refined_params;
    for (std::size_t i = 0; i < bn; ++i) {
      refined.vertices.push_back(bc[i]);
      refined_params.push_back(params[i]);
      if (i < bedges) {
        refined.vertices.push_back(v0 + s.edge_index(bc[i], bc[(i + 1) % bn]));
        refined_params.push_back(mid_param[i]);
      }
    }
    out.complex = std::move(next);
    out.boundary_path = std::move(refined);
    params = std::move(refined_params);
  }
  return out;
}

Side inside_outside(const EmbeddedComplex& embedded, const Path& curve, VertexId v) {
  embedded.surface.require_vertex(v);
  if (index_of(curve, v) >= 0) return Side::OnCurve;
  const Point2& p = embedded.coords[v];
  const auto& cv = curve.vertices;
  bool inside = false;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    const Point2& a = embedded.coords[cv[i]];
    const Point2& b = embedded.coords[cv[(i + 1) % cv.size()]];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (p.x < x) inside = !inside;
  }
  return inside ? Side::Inside : Side::Outside;
}

EmbeddedComplex fan_triangulation(const std::vector<Point2>& ring, const Point2& centre) {
  const int n = static_cast<int>(ring.size());
  if (n < 3) throw Error(ErrorCode::BadParameters, "fan needs at least three ring points");
  EmbeddedComplex ec;
  ec.coords = ring;
  ec.coords.push_back(centre);
  ec.provenance.assign(n + 1, {VertexOrigin::Original, -1, -1});
  std::vector<std::vector<VertexId>> cells;
  for (int i = 0; i < n; ++i) cells.push_back({i, (i + 1) % n, n});
  ec.surface = Surface(n + 1, std::move(cells));
  return ec;
}

std::vector<Point2> circle_polygon(int n, const Rational& radius) {
  if (n < 3) throw Error(ErrorCode::BadParameters, "circle needs at least three points");
  const double pi = std::acos(-1.0);
  std::vector<Point2> pts;
  for (int k = 0; k < n; ++k) {
    double theta = 2 * pi * k / n;
    if (2 * k == n) {
      pts.push_back(Point2{-radius, 0});
      continue;
    }
    if (2 * k > n) theta -= 2 * pi;
    Rational t(static_cast<long>(std::llround(std::tan(theta / 2) * (1 << 20))), 1L << 20);
    t.canonicalize();
    Rational d = 1 + t * t;
    pts.push_back(Point2{radius * (1 - t * t) / d, radius * 2 * t / d});
  }
  return pts;
}

std::vector<std::string> check_embedding(const EmbeddedComplex& ec, int pairwise_limit) {
  std::vector<std::string> out;
  const Surface& s = ec.surface;
  if (static_cast<int>(ec.coords.size()) != s.vertex_count()) out.push_back("coordinate count mismatch");
  std::vector<VertexId> order(ec.coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return ec.coords[a] < ec.coords[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (ec.coords[order[i]] == ec.coords[order[i - 1]])
      out.push_back("vertices " + std::to_string(order[i - 1]) + " and " + std::to_string(order[i]) +
                    " share coordinates");
  for (CellId c = 0; c < s.cell_count(); ++c) {
    auto cell = s.cell(c);
    for (std::size_t i = 0; i < cell.size(); ++i)
      if (orientation(ec.coords[cell[i]], ec.coords[cell[(i + 1) % cell.size()]],
                      ec.coords[cell[(i + 2) % cell.size()]]) <= 0) {
        out.push_back("cell " + std::to_string(c) + " is not strictly convex and counterclockwise");
        break;
      }
  }
  if (s.cell_count() > pairwise_limit) return out;
  auto separated = [&](std::span<const VertexId> p, std::span<const VertexId> q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point2& a = ec.coords[p[i]];
      const Point2& b = ec.coords[p[(i + 1) % p.size()]];
      bool all_out = true;
      for (VertexId v : q)
        if (orientation(a, b, ec.coords[v]) > 0) all_out = false;
      if (all_out) return true;
    }
    return false;
  };
  for (CellId c = 0; c < s.cell_count(); ++c)
    for (CellId d = c + 1; d < s.cell_count(); ++d)
      if (!separated(s.cell(c), s.cell(d)) && !separated(s.cell(d), s.cell(c)))
        out.push_back("cells " + std::to_string(c) + " and " + std::to_string(d) + " overlap");
  return out;
}

Rational max_edge_length_sq(const EmbeddedComplex& embedded, const Path& path) {
  Rational best = 0;
  for (const Edge& e : path.edges()) best = std::max(best, squared_distance(embedded.coords[e.a], embedded.coords[e.b]));
  return best;
}

}  // namespace djc

#include "djc/random.hpp"

namespace djc {

std::vector<Point2> random_simple_polygon(std::uint64_t seed, int min_vertices, int max_vertices, int grid) {
  if (min_vertices < 3 || max_vertices < min_vertices || grid < 2)
    throw Error(ErrorCode::BadParameters, "bad polygon sampling bounds");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int n = static_cast<int>(rng.between(min_vertices, max_vertices));
    std::vector<std::pair<long, long>> raw;
    while (static_cast<int>(raw.size()) < n) {
      std::pair<long, long> p{static_cast<long>(rng.below(grid + 1)), static_cast<long>(rng.below(grid + 1))};
      if (std::find(raw.begin(), raw.end(), p) == raw.end()) raw.push_back(p);
    }
    Point2 mean{0, 0};
    for (auto& [x, y] : raw) {
      mean.x += x;
      mean.y += y;
    }
    mean.x /= n;
    mean.y /= n;
    std::vector<Point2> pts;
    for (auto& [x, y] : raw) pts.push_back(Point2{Rational(x), Rational(y)});
    auto half = [&](const Point2& p) {
      return (p.y > mean.y || (p.y == mean.y && p.x > mean.x)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
      const int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      const int o = orientation(mean, a, b);
      if (o != 0) return o > 0;
      return squared_distance(mean, a) < squared_distance(mean, b);
    });
    if (is_simple_polygon(pts)) return pts;
  }
  throw Error(ErrorCode::BudgetExhausted, "no simple polygon within budget");
}

}  // namespace djc
