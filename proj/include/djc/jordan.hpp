#pragma once

#include <string>
#include <vector>

#include "djc/curves.hpp"
#include "djc/surface.hpp"

namespace djc {

enum class VertexOrigin { Original, LatticePoint, SnapPoint, VeblenEdge, VeblenFace };
std::string_view to_string(VertexOrigin origin);

struct Provenance {
  VertexOrigin origin = VertexOrigin::Original;
  int parent_a = -1;  // VeblenEdge: edge endpoints; VeblenFace: parent cell
  int parent_b = -1;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct VeblenOptions {
  // Mutation hook for the acceptance suite: also split the curve's own edges.
  bool subdivide_curve_edges = false;
};

struct VeblenResult {
  Surface surface;
  std::vector<Provenance> provenance;  // per vertex of `surface`
  std::vector<VertexId> face_point;    // per cell of the input surface
};

/// Star-triangulates every cell around a face point and splits every edge off
/// the curve at an edge point. Vertex ids: originals, then one face point per
/// cell in cell order, then edge points in sorted edge order.
/// Throws CurveTouchesBoundary.
VeblenResult insert_veblen_points(const Surface& surface, const Path& curve,
                                  const VeblenOptions& options = {});

struct SeparationReport {
  Path curve;
  std::vector<std::vector<VertexId>> components;  // sorted by (size, smallest id)
  std::vector<CellId> flank_clockwise;           // A_i: cells running along the curve
  std::vector<CellId> flank_counterclockwise;    // B_j: cells running against it
  VertexId seed_a = -1;
  VertexId seed_b = -1;

  /// Index into components, or -1 for curve vertices.
  int component_of(VertexId v) const;
  bool seeds_separated() const;
};

/// Flood fill of S - C plus flank cells and seeds. The surface is oriented
/// internally if its stored orders disagree. Throws CurveNotClosed,
/// CurveTouchesBoundary and the errors of require_simple_path.
SeparationReport components(const Surface& surface, const Path& curve);

enum class Verdict { Pass, Fail, HypothesesFailed };
std::string_view to_string(Verdict v);

struct Theorem1Result {
  Verdict verdict = Verdict::Fail;
  HypothesisReport hypotheses;
  SeparationReport report;
  bool conclusion_holds = false;  // >= 2 components with seeds apart
  std::string note;
};

Theorem1Result check_theorem1(const Surface& surface, const Path& curve,
                              const HypothesisOptions& options = {});

struct Theorem2Result {
  Verdict verdict = Verdict::Fail;
  VeblenResult refined;
  SeparationReport report;        // on the refined surface
  bool flanks_separated = false;  // all A_i face points in one component, all B_j in another
  std::string note;
};

Theorem2Result check_theorem2(const Surface& surface, const Path& curve,
                              const VeblenOptions& options = {});

struct DegenerateBoundary {
  std::vector<VertexId> cycle;                  // 2-core walked from its smallest vertex
  bool cycle_is_simple = false;                 // 2-core is one simple cycle
  std::vector<std::vector<VertexId>> branches;  // each starts at its attachment vertex
  std::vector<Edge> link_edges;
};

/// S(X) - X as the edges of cells meeting X that avoid X, split into its
/// 2-core and the trees hanging off it. Throws NotAnArc.
DegenerateBoundary classify_arc_neighborhood_boundary(const Surface& surface,
                                                      std::span<const VertexId> arc);

}  // namespace djc
