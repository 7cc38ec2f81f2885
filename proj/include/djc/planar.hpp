#pragma once

#include <optional>
#include <string>
#include <vector>

#include "djc/curves.hpp"
#include "djc/jordan.hpp"
#include "djc/rational.hpp"
#include "djc/surface.hpp"

namespace djc {

/// A surface with exact planar coordinates. Cells of complexes built here
/// are triangles stored counterclockwise in the plane.
struct EmbeddedComplex {
  Surface surface;
  std::vector<Point2> coords;          // per vertex
  std::vector<Provenance> provenance;  // per vertex
};

struct BBox {
  Point2 lo;
  Point2 hi;
};

struct EmbedConfig {
  std::optional<Rational> edge_length;  // default: largest r/3 with r <= d0 on a 1/1024 grid
  std::optional<Rational> margin;       // default: smallest integer above the diameter
  int widen_rounds = 2;
  int isolate_rounds = 2;
};

struct PolylineCurve {
  std::vector<Point2> points;
  bool closed = true;
};

/// Row-based triangular lattice: row j sits at y = lo.y + j*h, its points at
/// x = lo.x + (i + [j odd]/2) h for i = -1 .. ceil(width/h). Neighbouring rows
/// are zipped into triangles, so every cell is a triangle and the bbox is
/// covered. Throws DegenerateBBox, BadParameters.
EmbeddedComplex lattice(const Rational& edge_length, const BBox& bbox);

bool is_simple_polygon(const std::vector<Point2>& polygon);
/// Smallest squared distance over all pairs of polygon vertices.
Rational min_vertex_distance_sq(const std::vector<Point2>& polygon);
Rational diameter_sq(const std::vector<Point2>& polygon);

/// Fills in defaults and checks 9 h^2 <= d0^2 and margin^2 > diameter^2.
/// Throws NotSimplePolygon, LatticeTooCoarse, BadParameters.
EmbedConfig resolve_config(const std::vector<Point2>& polygon, const EmbedConfig& config);
BBox embedding_bbox(const std::vector<Point2>& polygon, const Rational& margin);

struct EmbedResult {
  EmbeddedComplex complex;
  Path curve;
  std::vector<long> measure_history;  // unresolved crossings before each pass, ending in 0
};

/// Inserts the polygon into the lattice: vertices become mesh vertices (edge
/// or triangle split), polygon edges are split where they cross mesh edges,
/// until the polygon is a closed vertex path of the complex.
/// Throws NotSimplePolygon, LatticeTooCoarse, BadParameters.
EmbedResult embed_polygon(const EmbeddedComplex& lattice, const std::vector<Point2>& polygon);

/// `rounds` rounds of splitting every triangle at its centroid. Existing
/// vertex ids are kept; each round appends one face point per cell.
EmbeddedComplex widen_angles(const EmbeddedComplex& embedded, int rounds);

/// `rounds` rounds of Veblen refinement near the curve: a face point in every
/// cell touching the curve and a midpoint on every non-curve edge touching it.
EmbeddedComplex isolate_curve(const EmbeddedComplex& embedded, const Path& curve, int rounds);

/// resolve_config, lattice, embed_polygon, widen_angles, isolate_curve.
EmbedResult embed(const std::vector<Point2>& polygon, const EmbedConfig& config = {});

struct Subdivision {
  EmbeddedComplex complex;
  Path boundary_path;  // B_C
};

/// Each level splits every triangle into four at its edge midpoints. The
/// midpoint of an edge of B_C is moved onto the curve at the parameter
/// midpoint of its endpoints, where the parameter of P_k + s (P_k+1 - P_k) is
/// (k + s) / segment_count. B_C starts as the mesh vertices lying on the curve,
/// in parameter order. Throws CurveTriangleMultiCross, InvertedCell, NotAPath, EdgeMissing,
/// BadParameters.
Subdivision midpoint_subdivide(const EmbeddedComplex& embedded, const PolylineCurve& curve, int levels);

enum class Side { Inside, Outside, OnCurve };
std::string_view to_string(Side side);

/// Ray casting against the polygon traced by `curve`, half-open rule.
Side inside_outside(const EmbeddedComplex& embedded, const Path& curve, VertexId v);

/// Fan of triangles from `centre` to consecutive ring points.
EmbeddedComplex fan_triangulation(const std::vector<Point2>& ring, const Point2& centre);
/// n rational points exactly on the circle of given radius around the origin,
/// counterclockwise, via the rational parameterization of the circle.
std::vector<Point2> circle_polygon(int n, const Rational& radius);

/// Embedding invariant violations; the pairwise overlap test only runs when
/// the cell count is at most `pairwise_limit`.
std::vector<std::string> check_embedding(const EmbeddedComplex& embedded, int pairwise_limit = 400);

Rational max_edge_length_sq(const EmbeddedComplex& embedded, const Path& path);

}  // namespace djc

namespace djc {

/// Integer points in [0, grid]^2 sorted by angle around their mean, retried
/// until the polygon is simple. Throws BudgetExhausted.
std::vector<Point2> random_simple_polygon(std::uint64_t seed, int min_vertices, int max_vertices, int grid);

}  // namespace djc
