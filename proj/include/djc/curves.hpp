#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "djc/surface.hpp"

namespace djc {

/// Vertex sequence in the ambient surface. For closed paths the closing edge
/// back to the first vertex is implicit.
struct Path {
  std::vector<VertexId> vertices;
  bool closed = false;

  std::size_t size() const { return vertices.size(); }
  /// Number of edges, counting the closing edge of a closed path.
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
  friend bool operator==(const Path&, const Path&) = default;
};

enum class CurveClass { PseudoCurve, SemiCurve, DiscreteCurve };
std::string_view to_string(CurveClass c);

/// Throws NotSimple, EdgeMissing or UnknownVertex.
void require_simple_path(const Surface& surface, const Path& path);

/// DiscreteCurve: the vertex set contains no cell's vertex set.
/// SemiCurve: closed path running exactly around one cell.
/// PseudoCurve: everything else.
CurveClass classify(const Surface& surface, const Path& path);

struct AngleReport {
  VertexId x0 = -1;
  int wideness = 0;
  std::vector<VertexId> witness;  // x_{-1} ... x_1
};

/// Shortest detour from the curve predecessor of x0 to its successor through
/// edges of cells around x0, avoiding x0. Throws NoDetour if none exists.
AngleReport angle_wideness(const Surface& surface, const Path& curve, VertexId x0);

struct PairViolation {
  VertexId p = -1;
  VertexId q = -1;
  std::vector<VertexId> path;  // off-curve witness from p to q
};

struct HypothesisReport {
  bool discrete = true;
  std::vector<AngleReport> narrow_angles;
  std::vector<PairViolation> pair_violations;

  bool ok() const { return discrete && narrow_angles.empty() && pair_violations.empty(); }
};

struct HypothesisOptions {
  int radius = 4;  // longest off-curve path examined for condition (2)
};

/// Wide-angle conditions. Throws CurveNotClosed, BoundaryContact, and the
/// errors of require_simple_path.
HypothesisReport check_theorem1_hypotheses(const Surface& surface, const Path& curve,
                                           const HypothesisOptions& options = {});

/// Arc from p to q along the stored direction, and arc from p to q against it.
std::pair<std::vector<VertexId>, std::vector<VertexId>> split_arcs(const Path& curve, VertexId p,
                                                                   VertexId q);

/// Index of v in the path, or -1.
int index_of(const Path& path, VertexId v);

}  // namespace djc
