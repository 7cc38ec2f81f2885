#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "djc/curves.hpp"
#include "djc/surface.hpp"

namespace djc {

enum class DeformationKind { Contraction, ArcDeformation };

struct DeformationSequence {
  DeformationKind kind = DeformationKind::Contraction;
  std::vector<Path> entries;
  std::vector<CellId> removed;      // removed[i] turns entries[i] into entries[i + 1]
  std::vector<char> distance_kept;  // per step: distances of the next entry's vertices unchanged

  std::size_t steps() const { return removed.size(); }
};

/// Breadth-first edge-count distances from the sources within the cells
/// flagged in `cells` (all cells if empty). Unreached vertices get -1.
std::vector<int> graph_distances(const Surface& surface, const std::vector<char>& cells,
                                 const std::vector<VertexId>& sources);
std::vector<int> graph_distances(const Surface& surface, VertexId p);

/// Cells of the disk bounded by the curve: the side whose boundary is exactly
/// the curve, the smaller one if both qualify, the side running along the
/// curve on a tie. Throws InteriorNotDisk or InteriorNotTriangulated.
std::vector<char> interior_region(const Surface& surface, const Path& curve);

/// Shrinks the curve one triangle at a time until it bounds the single
/// remaining triangle containing p. Throws AnchorNotOnCurve, CurveNotClosed,
/// InteriorNotDisk, InteriorNotTriangulated.
DeformationSequence contract_cycle(const Surface& surface, const Path& curve, VertexId p);

/// Sweeps the arc C(p, q) across the interior onto the opposite arc.
DeformationSequence deform_arc(const Surface& surface, const Path& curve, VertexId p, VertexId q);

/// Exhaustive search over all simple p-q paths of the surface linked by
/// side-gradual variation. Throws TooLarge above `cell_limit` cells.
bool oracle_definition_c(const Surface& surface, const Path& curve, VertexId p, VertexId q,
                         int cell_limit = 12);

struct SampleSpec {
  std::vector<Path> curves;  // used as given
  int random_curves = 0;     // extra curves drawn with random_curve
  int pairs_per_curve = 3;
  std::uint64_t seed = 0;
};

struct CertifyEntry {
  Path curve;
  VertexId p = -1;
  VertexId q = -1;
  bool success = false;
  std::string error;
};

struct CertifyReport {
  std::vector<CertifyEntry> entries;
  bool certified = false;
  std::string warning;
};

CertifyReport certify_simply_connected(const Surface& surface, const SampleSpec& spec);

}  // namespace djc
