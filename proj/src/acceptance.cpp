#include "djc/acceptance.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "djc/contraction.hpp"
#include "djc/error.hpp"
#include "djc/gensurf.hpp"
#include "djc/io.hpp"
#include "djc/jordan.hpp"
#include "djc/planar.hpp"
#include "djc/random.hpp"
#include "djc/render.hpp"
#include "djc/variation.hpp"

namespace djc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Times a block and adds it to an accumulator.
struct Timer {
  double& total;
  Clock::time_point start = Clock::now();
  ~Timer() { total += seconds_since(start); }
};

CriterionResult named(int id, const char* name) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  return r;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Disks and spheres for the link and arc neighbourhood checks.
GenSpec corpus_spec(int i, std::uint64_t seed) {
  switch (i % 4) {
    case 0: return {SurfaceKind::Octahedron, 0, 0, seed};
    case 1: return {SurfaceKind::Icosahedron, 0, 0, seed};
    case 2: return {SurfaceKind::Disk, 2 + (i / 4) % 6, 0, seed};
    default: return {SurfaceKind::Fan, 3 + (i / 4) % 10, 0, seed};
  }
}

// Disk where the arc 0, 1, 2 has a folded branch 4 - 3 in its link.
Surface pinch_fixture() {
  return Surface::from_cells({{1, 2, 3}, {1, 3, 0}, {1, 0, 6}, {1, 6, 7}, {1, 7, 8}, {1, 8, 2},
                              {3, 2, 4}, {3, 4, 0}, {0, 4, 5}, {0, 5, 6}, {2, 8, 9}, {2, 9, 4}});
}

bool link_cycle_ok(const Surface& s, VertexId p, std::string* why) {
  std::vector<VertexId> ring;
  try {
    ring = link_cycle(s, p);
  } catch (const Error& e) {
    *why = e.what();
    return false;
  }
  std::set<VertexId> seen(ring.begin(), ring.end());
  if (seen.size() != ring.size() || ring.size() < 3) {
    *why = "ring repeats a vertex";
    return false;
  }
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!s.has_edge(ring[i], ring[(i + 1) % ring.size()])) {
      *why = "ring skips an edge";
      return false;
    }
  auto nb = neighborhood(s, p);
  std::set<VertexId> expect(nb.vertices.begin(), nb.vertices.end());
  expect.erase(p);
  if (expect != seen) {
    *why = "ring does not cover S(p) - p";
    return false;
  }
  return true;
}

struct PolygonStats {
  int polygons = 0;
  int theorem1_pass = 0;
  std::size_t theorem1_min_components = 0;
  std::string theorem1_first_failure;
  int theorem2_pass = 0;
  std::string theorem2_first_failure;
  long arcs = 0;
  long arcs_with_branches = 0;
  long sampled = 0;
  long disagreements = 0;
  int agreement_failures = 0;
  double t_embed = 0, t_theorem1 = 0, t_theorem2 = 0, t_arcs = 0, t_agree = 0;
};

PolygonStats polygon_pass(const AcceptConfig& cfg) {
  PolygonStats st;
  EmbedConfig ec;
  ec.widen_rounds = cfg.widen_rounds;
  VeblenOptions vo;
  vo.subdivide_curve_edges = cfg.mutate_veblen;
  for (int i = 0; i < 100; ++i) {
    ++st.polygons;
    EmbedResult r;
    {
      Timer t{st.t_embed};
      r = embed(random_simple_polygon(cfg.seed + i, 3, 12, 5), ec);
    }
    const Surface& s = r.complex.surface;
    {
      Timer t{st.t_theorem1};
      auto t1 = check_theorem1(s, r.curve);
      const bool ok = t1.verdict == Verdict::Pass && t1.report.components.size() >= 2 && t1.report.seeds_separated();
      if (ok) {
        ++st.theorem1_pass;
        if (st.theorem1_min_components == 0 || t1.report.components.size() < st.theorem1_min_components)
          st.theorem1_min_components = t1.report.components.size();
      } else if (st.theorem1_first_failure.empty()) {
        st.theorem1_first_failure = "polygon " + std::to_string(i) + ": " + std::string(to_string(t1.verdict)) + " " + t1.note;
      }
    }
    {
      Timer t{st.t_theorem2};
      auto t2 = check_theorem2(s, r.curve, vo);
      if (t2.verdict == Verdict::Pass && t2.report.components.size() == 2 && t2.flanks_separated)
        ++st.theorem2_pass;
      else if (st.theorem2_first_failure.empty())
        st.theorem2_first_failure = "polygon " + std::to_string(i) + ": " +
                                    std::to_string(t2.report.components.size()) + " components";
    }
    if (i < 10) {
      Timer t{st.t_arcs};
      const auto& cv = r.curve.vertices;
      for (std::size_t len = 3; len <= 8; ++len)
        for (std::size_t start = 0; start < cv.size(); start += 2) {
          std::vector<VertexId> arc;
          for (std::size_t k = 0; k < len; ++k) arc.push_back(cv[(start + k) % cv.size()]);
          auto d = classify_arc_neighborhood_boundary(s, arc);
          ++st.arcs;
          if (!d.branches.empty() || !d.cycle_is_simple) ++st.arcs_with_branches;
        }
    }
    {
      Timer t{st.t_agree};
      auto rep = components(s, r.curve);
      std::vector<VertexId> ids(s.vertex_count());
      for (VertexId v = 0; v < s.vertex_count(); ++v) ids[v] = v;
      Rng rng(cfg.seed * 7919 + static_cast<std::uint64_t>(i));
      rng.shuffle(ids);
      ids.resize(std::min<std::size_t>(ids.size(), 1000));
      std::map<int, std::set<Side>> labels;
      long bad = 0;
      for (VertexId v : ids) {
        const Side side = inside_outside(r.complex, r.curve, v);
        const int comp = rep.component_of(v);
        ++st.sampled;
        if ((side == Side::OnCurve) != (comp < 0)) {
          ++bad;
          continue;
        }
        if (comp >= 0) labels[comp].insert(side);
      }
      std::map<Side, std::set<int>> owners;
      for (auto& [comp, sides] : labels) {
        if (sides.size() != 1) ++bad;
        for (Side sd : sides) owners[sd].insert(comp);
      }
      // one component per side: all inside points together, all outside together
      for (auto& [sd, comps] : owners)
        if (comps.size() != 1) ++bad;
      if (owners.count(Side::Inside) && owners.count(Side::Outside) &&
          *owners[Side::Inside].begin() == *owners[Side::Outside].begin())
        ++bad;
      st.disagreements += bad;
      if (bad) ++st.agreement_failures;
    }
  }
  return st;
}

CriterionResult lemma1(const AcceptConfig& cfg) {
  CriterionResult r = named(1, "link-cycles");
  const auto t0 = Clock::now();
  long checked = 0, failed = 0;
  std::string first;
  for (int i = 0; i < 100; ++i) {
    auto g = generate(corpus_spec(i, cfg.seed + i));
    for (VertexId p = 0; p < g.surface.vertex_count(); ++p) {
      if (g.surface.is_boundary_vertex(p)) continue;
      ++checked;
      std::string why;
      if (!link_cycle_ok(g.surface, p, &why)) {
        ++failed;
        if (first.empty()) first = "surface " + std::to_string(i) + " vertex " + std::to_string(p) + ": " + why;
      }
    }
  }
  r.seconds = seconds_since(t0);
  r.pass = failed == 0 && checked > 0 && r.seconds < 5.0;
  r.detail = std::to_string(checked - failed) + "/" + std::to_string(checked) + " interior vertices" +
             (first.empty() ? "" : "; " + first) + (r.seconds < 5.0 ? "" : "; over the 5 s budget");
  return r;
}

CriterionResult lemma3(const AcceptConfig& cfg, const PolygonStats& ps) {
  CriterionResult r = named(2, "arc-neighbourhoods");
  const auto t0 = Clock::now();
  long edges = 0, failed = 0;
  for (int i = 0; i < 100; ++i) {
    auto g = generate(corpus_spec(i, cfg.seed + i));
    const Surface& s = g.surface;
    for (int e = 0; e < s.edge_count(); ++e) {
      const Edge ed = s.edges()[e];
      if (s.is_boundary_vertex(ed.a) || s.is_boundary_vertex(ed.b)) continue;
      ++edges;
      const VertexId arc[2] = {ed.a, ed.b};
      auto d = classify_arc_neighborhood_boundary(s, arc);
      if (!d.branches.empty() || !d.cycle_is_simple) ++failed;
    }
  }
  const VertexId pinch_arc[3] = {0, 1, 2};
  const auto pinch = classify_arc_neighborhood_boundary(pinch_fixture(), pinch_arc);
  r.seconds = seconds_since(t0) + ps.t_arcs;
  r.pass = failed == 0 && edges > 0 && ps.arcs > 0 && ps.arcs_with_branches == 0 && !pinch.branches.empty();
  r.detail = std::to_string(edges - failed) + "/" + std::to_string(edges) + " interior edges clean, " +
             std::to_string(ps.arcs - ps.arcs_with_branches) + "/" + std::to_string(ps.arcs) +
             " widened lattice arcs clean, pinch fixture branches " + std::to_string(pinch.branches.size());
  return r;
}

CriterionResult theorem1(const PolygonStats& ps) {
  CriterionResult r = named(3, "embedded-polygons-separate");
  r.seconds = ps.t_embed + ps.t_theorem1;
  r.pass = ps.theorem1_pass == ps.polygons && r.seconds < 60.0;
  r.detail = std::to_string(ps.theorem1_pass) + "/" + std::to_string(ps.polygons) +
             " pass, fewest components " + std::to_string(ps.theorem1_min_components) +
             (ps.theorem1_first_failure.empty() ? "" : "; " + ps.theorem1_first_failure) +
             (r.seconds < 60.0 ? "" : "; over the 60 s budget");
  return r;
}

CriterionResult theorem2(const AcceptConfig& cfg, const PolygonStats& ps) {
  CriterionResult r = named(4, "veblen-two-components");
  const auto t0 = Clock::now();
  VeblenOptions vo;
  vo.subdivide_curve_edges = cfg.mutate_veblen;
  int spheres = 0, sphere_pass = 0, case1_ok = 0;
  for (int i = 0; i < 20; ++i) {
    auto g = generate({i % 2 ? SurfaceKind::Icosahedron : SurfaceKind::Octahedron, 0, 0, cfg.seed + i});
    const CellId c = static_cast<CellId>((i * 7) % g.surface.cell_count());
    auto cell = g.surface.cell(c);
    Path curve{{cell.begin(), cell.end()}, true};
    ++spheres;
    auto t2 = check_theorem2(g.surface, curve, vo);
    if (t2.verdict == Verdict::Pass && t2.report.components.size() == 2 && t2.flanks_separated) {
      ++sphere_pass;
      const auto& small = t2.report.components.front();
      if (small.size() == 1 && small[0] == t2.refined.face_point[c]) ++case1_ok;
    }
  }
  r.seconds = seconds_since(t0) + ps.t_theorem2;
  r.pass = ps.theorem2_pass == ps.polygons && sphere_pass == spheres && case1_ok == spheres;
  r.detail = std::to_string(ps.theorem2_pass) + "/" + std::to_string(ps.polygons) + " polygons, " +
             std::to_string(sphere_pass) + "/" + std::to_string(spheres) + " semi-curve spheres, " +
             std::to_string(case1_ok) + " with a single-vertex inside" +
             (ps.theorem2_first_failure.empty() ? "" : "; " + ps.theorem2_first_failure);
  return r;
}

CriterionResult torus(const AcceptConfig& cfg) {
  CriterionResult r = named(5, "torus-negative-control");
  const auto t0 = Clock::now();
  int cases = 0, ok = 0;
  for (int m : {3, 4, 6, 8})
    for (int n : {3, 4, 6, 8}) {
      auto g = generate({SurfaceKind::TorusGrid, m, n, cfg.seed});
      for (const char* name : {"meridian", "longitude"}) {
        ++cases;
        auto rep = components(g.surface, g.curves.at(name));
        if (rep.components.size() == 1) ++ok;
      }
    }
  r.seconds = seconds_since(t0);
  r.pass = cases == 32 && ok == cases;
  r.detail = std::to_string(ok) + "/" + std::to_string(cases) + " curves leave one component";
  return r;
}

CriterionResult contraction(const AcceptConfig& cfg) {
  CriterionResult r = named(6, "contraction-contract");
  const auto t0 = Clock::now();
  struct Case {
    std::string name;
    Surface surface;
    Path curve;
  };
  std::vector<Case> cases;
  cases.push_back({"triangle", Surface::from_cells({{0, 1, 2}}), Path{{0, 1, 2}, true}});
  for (int n = 3; n <= 20; ++n) {
    auto g = generate({SurfaceKind::Fan, n, 0, cfg.seed + n});
    cases.push_back({"fan" + std::to_string(n), g.surface, g.curves.at("rim")});
  }
  {
    auto g = generate({SurfaceKind::Fan, 500, 0, cfg.seed});
    cases.push_back({"fan500", g.surface, g.curves.at("rim")});
  }
  for (int rings = 1; rings <= 9; ++rings) {
    auto g = generate({SurfaceKind::Disk, rings, 0, cfg.seed + rings});
    cases.push_back({"disk" + std::to_string(rings), g.surface, g.curves.at("rim")});
  }
  {
    auto g = generate({SurfaceKind::Disk, 9, 0, cfg.seed});
    for (int k = 0; k < 20; ++k)
      cases.push_back({"disk9-curve" + std::to_string(k), g.surface, random_curve(g.surface, cfg.seed + k)});
  }
  int ok = 0, largest = 0;
  double slowest = 0;
  std::string first;
  for (const auto& c : cases) {
    const auto tc = Clock::now();
    std::string why;
    try {
      const auto region = interior_region(c.surface, c.curve);
      const int tri = static_cast<int>(std::count(region.begin(), region.end(), 1));
      if (tri > 500) continue;
      largest = std::max(largest, tri);
      const VertexId p = c.curve.vertices[0];
      auto seq = contract_cycle(c.surface, c.curve, p);
      if (static_cast<int>(seq.steps()) != tri - 1) why = "steps " + std::to_string(seq.steps()) + " for T=" + std::to_string(tri);
      for (std::size_t i = 0; why.empty() && i < seq.steps(); ++i) {
        const Path& a = seq.entries[i];
        const Path& b = seq.entries[i + 1];
        auto v = is_gradually_varied(c.surface, a, b);
        if (!v.varied || v.witness.size() != 1 || v.witness[0] != seq.removed[i])
          why = "step " + std::to_string(i) + " not varied by one cell";
        else if (crosses_over(c.surface, a, b).crosses)
          why = "step " + std::to_string(i) + " crosses over";
        else if (!seq.distance_kept[i])
          why = "step " + std::to_string(i) + " moved distances";
      }
    } catch (const Error& e) {
      why = e.what();
    }
    slowest = std::max(slowest, seconds_since(tc));
    if (why.empty())
      ++ok;
    else if (first.empty())
      first = c.name + ": " + why;
  }
  r.seconds = seconds_since(t0);
  r.pass = ok == static_cast<int>(cases.size()) && slowest < 30.0;
  r.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " disks, largest T=" + std::to_string(largest) +
             ", slowest " + fmt("%.2f", slowest) + " s" + (first.empty() ? "" : "; " + first);
  return r;
}

CriterionResult oracle(const AcceptConfig& cfg) {
  CriterionResult r = named(7, "arc-deformation-oracle");
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, Generated>> complexes;
  complexes.emplace_back("disk1", generate({SurfaceKind::Disk, 1, 0, cfg.seed}));
  for (int n = 3; n <= cfg.oracle_cell_limit; ++n)
    complexes.emplace_back("fan" + std::to_string(n), generate({SurfaceKind::Fan, n, 0, cfg.seed + n}));
  complexes.emplace_back("annulus8", generate({SurfaceKind::Annulus, 8, 0, cfg.seed}));
  long pairs = 0, agree = 0, annulus_pairs = 0, annulus_false = 0;
  std::string first;
  for (auto& [name, g] : complexes) {
    if (g.surface.cell_count() > cfg.oracle_cell_limit) continue;
    for (auto& [curve_name, curve] : g.curves) {
      for (VertexId p : curve.vertices)
        for (VertexId q : curve.vertices) {
          if (p == q) continue;
          bool deformed = true;
          try {
            deform_arc(g.surface, curve, p, q);
          } catch (const Error&) {
            deformed = false;
          }
          const bool truth = oracle_definition_c(g.surface, curve, p, q, cfg.oracle_cell_limit);
          ++pairs;
          if (deformed == truth)
            ++agree;
          else if (first.empty())
            first = name + "/" + curve_name + " p=" + std::to_string(p) + " q=" + std::to_string(q);
          if (name.rfind("annulus", 0) == 0) {
            ++annulus_pairs;
            if (!truth) ++annulus_false;
          }
        }
    }
  }
  r.seconds = seconds_since(t0);
  r.pass = pairs > 0 && agree == pairs && annulus_pairs > 0 && annulus_false == annulus_pairs;
  r.detail = std::to_string(agree) + "/" + std::to_string(pairs) + " (p,q) pairs agree, annulus " +
             std::to_string(annulus_false) + "/" + std::to_string(annulus_pairs) + " false" +
             (first.empty() ? "" : "; first disagreement " + first);
  return r;
}

CriterionResult agreement(const PolygonStats& ps) {
  CriterionResult r = named(8, "planar-geometric-agreement");
  r.seconds = ps.t_agree;
  r.pass = ps.sampled > 0 && ps.disagreements == 0;
  r.detail = std::to_string(ps.sampled) + " sampled vertices over " + std::to_string(ps.polygons) + " polygons, " +
             std::to_string(ps.disagreements) + " disagreements";
  return r;
}

CriterionResult refinement() {
  CriterionResult r = named(9, "midpoint-refinement");
  const auto t0 = Clock::now();
  const auto ring = circle_polygon(64, Rational(1000));
  const EmbeddedComplex fan = fan_triangulation(ring, Point2{Rational(0), Rational(0)});
  const PolylineCurve curve{ring, true};
  const Subdivision start = midpoint_subdivide(fan, curve, 0);
  const Subdivision done = midpoint_subdivide(fan, curve, 3);
  long off = 0;
  for (VertexId v : done.boundary_path.vertices) {
    bool on = false;
    for (std::size_t k = 0; k < ring.size() && !on; ++k)
      on = on_segment(done.complex.coords[v], ring[k], ring[(k + 1) % ring.size()]);
    if (!on) ++off;
  }
  const Rational before = max_edge_length_sq(fan, start.boundary_path);
  const Rational after = max_edge_length_sq(done.complex, done.boundary_path);
  r.seconds = seconds_since(t0);
  r.pass = off == 0 && after * 64 <= before && !done.boundary_path.vertices.empty();
  r.detail = std::to_string(done.boundary_path.vertices.size()) + " B_C vertices, " + std::to_string(off) +
             " off the polyline, max edge " + fmt("%.6f", std::sqrt(after.get_d())) + " vs initial " +
             fmt("%.6f", std::sqrt(before.get_d())) + " (squared ratio " + format_rational(before / after) + ")";
  return r;
}

std::string pipeline_digest(std::uint64_t seed) {
  std::string all;
  auto g = generate({SurfaceKind::Disk, 4, 0, seed});
  all += write_surface(g.surface);
  const Path c = random_curve(g.surface, seed);
  all += write_curve(c);
  all += write_separation(components(g.surface, c), Verdict::Pass);
  all += write_sequence(contract_cycle(g.surface, c, c.vertices[0]));
  all += render_svg(g.surface, tutte_layout(g.surface), {c});
  const auto poly = random_simple_polygon(seed, 3, 8, 4);
  all += write_polygon(poly);
  const EmbedConfig cfg = resolve_config(poly, {});
  auto e = embed_polygon(lattice(*cfg.edge_length, embedding_bbox(poly, *cfg.margin)), poly);
  all += write_embedded(e.complex, {e.curve});
  return sha256_hex(all);
}

CriterionResult determinism(const AcceptConfig& cfg) {
  CriterionResult r = named(10, "determinism-round-trip");
  const auto t0 = Clock::now();
  int formats = 0, round_trips = 0;
  auto check = [&](const std::string& a, const std::string& b) {
    ++formats;
    if (a == b) ++round_trips;
  };
  for (auto kind : {SurfaceKind::Octahedron, SurfaceKind::Icosahedron, SurfaceKind::Disk, SurfaceKind::Fan,
                    SurfaceKind::TorusGrid, SurfaceKind::Annulus, SurfaceKind::Moebius}) {
    const int a = kind == SurfaceKind::Annulus ? 10 : 4;
    auto g = generate({kind, a, 5, cfg.seed + 3});
    const std::string text = write_surface(g.surface);
    check(text, write_surface(parse_scene(text).surface));
    for (auto& [name, curve] : g.curves) check(write_curve(curve), write_curve(parse_scene(write_curve(curve)).curves.at(0)));
  }
  {
    const auto poly = random_simple_polygon(cfg.seed + 1, 3, 12, 5);
    check(write_polygon(poly), write_polygon(parse_scene(write_polygon(poly)).polygon));
    const EmbedConfig ec = resolve_config(poly, {});
    auto e = embed_polygon(lattice(*ec.edge_length, embedding_bbox(poly, *ec.margin)), poly);
    const std::string text = write_embedded(e.complex, {e.curve});
    auto scene = parse_scene(text);
    check(text, write_embedded(embedded_from_scene(scene), scene.curves));
  }
  {
    auto g = generate({SurfaceKind::Octahedron, 0, 0, cfg.seed});
    const std::string text = write_separation(components(g.surface, g.curves.at("equator")), Verdict::Pass);
    auto back = parse_separation(text);
    SeparationReport rep;
    rep.components = back.components;
    rep.seed_a = back.seed_a;
    rep.seed_b = back.seed_b;
    check(text, write_separation(rep, back.verdict == "pass" ? Verdict::Pass : Verdict::Fail));
  }
  {
    auto g = generate({SurfaceKind::Disk, 3, 0, cfg.seed});
    const Path& rim = g.curves.at("rim");
    const std::string a = write_sequence(contract_cycle(g.surface, rim, rim.vertices[0]));
    check(a, write_sequence(parse_sequence(a)));
    const std::string b = write_sequence(deform_arc(g.surface, rim, rim.vertices[0], rim.vertices[5]));
    check(b, write_sequence(parse_sequence(b)));
  }
  std::set<std::string> digests;
  for (int rep = 0; rep < 10; ++rep) digests.insert(pipeline_digest(cfg.seed + 42));
  r.seconds = seconds_since(t0);
  r.pass = round_trips == formats && digests.size() == 1;
  r.detail = std::to_string(round_trips) + "/" + std::to_string(formats) + " round trips byte-equal, " +
             std::to_string(digests.size()) + " distinct digest over 10 runs (" + digests.begin()->substr(0, 16) + ")";
  return r;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::Io, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " " + r.name + ": " + r.detail +
         " (" + fmt("%.2f", r.seconds) + " s)";
}

std::vector<CriterionResult> run_acceptance(const AcceptConfig& cfg) {
  if (cfg.oracle_cell_limit < 1 || cfg.oracle_cell_limit > 14)
    throw Error(ErrorCode::BadParameters, "oracle_cell_limit must be in 1..14");
  if (cfg.widen_rounds < 2) throw Error(ErrorCode::BadParameters, "widen_rounds must be at least 2");
  std::vector<CriterionResult> out;
  out.push_back(lemma1(cfg));
  const PolygonStats ps = polygon_pass(cfg);
  out.push_back(lemma3(cfg, ps));
  out.push_back(theorem1(ps));
  out.push_back(theorem2(cfg, ps));
  out.push_back(torus(cfg));
  out.push_back(contraction(cfg));
  out.push_back(oracle(cfg));
  out.push_back(agreement(ps));
  out.push_back(refinement());
  out.push_back(determinism(cfg));
  return out;
}

}  // namespace djc
