#pragma once

#include <utility>
#include <vector>

#include "djc/curves.hpp"
#include "djc/surface.hpp"

namespace djc {

/// Symmetric difference of the edge sets, sorted.
std::vector<Edge> xor_sum(const Path& a, const Path& b);
std::vector<Edge> xor_edges(std::vector<Edge> a, std::vector<Edge> b);

struct VariationResult {
  bool varied = false;
  std::vector<CellId> witness;  // sorted; boundaries sum to the xor mod 2
};

/// Decides whether xor_sum(a, b) is a mod-2 sum of cell boundaries, using
/// only cells whose vertices all lie on a or b.
VariationResult is_gradually_varied(const Surface& surface, const Path& a, const Path& b);

struct CrossResult {
  bool crosses = false;
  std::vector<std::pair<VertexId, VertexId>> sites;  // shared runs p..q entered and left on opposite sides
};

/// Cross-over test on a consistently oriented surface. At boundary vertices
/// the open link is closed through a virtual vertex. Throws
/// IrregularSharedVertex if a run end has no single umbrella.
CrossResult crosses_over(const Surface& surface, const Path& a, const Path& b);

bool is_side_gradually_varied(const Surface& surface, const Path& a, const Path& b);

/// Sum of the cells' boundary edges mod 2, sorted.
std::vector<Edge> boundary_sum(const Surface& surface, const std::vector<CellId>& cells);

}  // namespace djc
