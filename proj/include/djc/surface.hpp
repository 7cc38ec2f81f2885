#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "djc/error.hpp"

namespace djc {

using VertexId = std::int32_t;
using CellId = std::int32_t;

/// Unordered vertex pair, always stored with a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A combinatorial 2-complex <V, E, U2>. Vertices are the dense range
/// [0, vertex_count()); 2-cells are cyclic vertex sequences whose stored order
/// is the cell's clockwise orientation; edges are derived from consecutive
/// pairs. Immutable once built; all indices are computed in the constructor.
///
/// The constructor accepts structurally invalid input (repeated vertices,
/// over-shared edges) so that validate() can report on it.
class Surface {
 public:
  Surface() = default;
  Surface(int vertex_count, std::vector<std::vector<VertexId>> cells);

  /// vertex_count = 1 + largest id mentioned (0 for no cells).
  static Surface from_cells(std::vector<std::vector<VertexId>> cells);

  int vertex_count() const { return vertex_count_; }
  int cell_count() const { return static_cast<int>(cell_offsets_.size()) - 1; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const VertexId> cell(CellId c) const {
    return {cell_vertices_.data() + cell_offsets_[c],
            static_cast<std::size_t>(cell_offsets_[c + 1] - cell_offsets_[c])};
  }
  std::vector<std::vector<VertexId>> cells() const;

  /// Sorted, unique.
  const std::vector<Edge>& edges() const { return edges_; }
  /// -1 if {u, v} is not an edge.
  int edge_index(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }
  std::span<const CellId> cells_of_edge(int edge) const;
  std::span<const CellId> cells_of_edge(VertexId u, VertexId v) const;

  /// Sorted, unique.
  std::span<const VertexId> neighbors(VertexId v) const;
  /// Sorted, unique.
  std::span<const CellId> cells_of_vertex(VertexId v) const;

  bool contains_vertex(VertexId v) const { return v >= 0 && v < vertex_count_; }
  void require_vertex(VertexId v) const;

  /// True iff cell c lists u immediately followed by v (cyclically).
  bool traverses(CellId c, VertexId u, VertexId v) const;
  /// Position of v in cell c, or -1.
  int position_in_cell(CellId c, VertexId v) const;

  bool is_boundary_edge(int edge) const { return cells_of_edge(edge).size() == 1; }
  bool is_boundary_vertex(VertexId v) const { return boundary_vertex_[v] != 0; }

  /// V - E + F over vertices that occur in at least one cell.
  int euler_characteristic() const;

 private:
  int vertex_count_ = 0;
  std::vector<VertexId> cell_vertices_;
  std::vector<std::int32_t> cell_offsets_{0};
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> edge_keys_;
  std::vector<std::int32_t> edge_cell_offsets_{0};
  std::vector<CellId> edge_cells_;
  std::vector<std::int32_t> adjacency_offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<std::int32_t> vertex_cell_offsets_{0};
  std::vector<CellId> vertex_cells_;
  std::vector<char> boundary_vertex_;
};

/// Vertex subset closed under induction: a cell is included iff all of its
/// vertices are, an edge iff both endpoints are.
struct Subcomplex {
  std::vector<VertexId> vertices;  // sorted
  std::vector<CellId> cells;       // sorted
  std::vector<Edge> edges;         // sorted

  bool contains(VertexId v) const;
};

Subcomplex induced_subcomplex(const Surface& surface, std::vector<VertexId> vertices);

enum class ViolationKind {
  CellTooShort,
  CellNotSimple,
  EdgeOverShared,
  CellsShareEdges,
  CellNotMinimal,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<CellId> cells;
  std::vector<Edge> edges;
};

/// Empty result means the surface satisfies every structural invariant.
std::vector<Violation> validate(const Surface& surface);

/// S(p): p together with every vertex sharing a 2-cell with p.
Subcomplex neighborhood(const Surface& surface, VertexId p);

/// S(X) = union of S(x) over a simple path X.
Subcomplex arc_neighborhood(const Surface& surface, std::span<const VertexId> path);

/// Ordered ring of S(p) - {p} walked cell to cell. `closed` is false for a
/// boundary vertex, in which case the ring runs between the two boundary
/// neighbours. Throws IrregularVertex if the incident cells do not form one
/// umbrella or the ring repeats a vertex.
struct VertexLink {
  std::vector<VertexId> ring;
  bool closed = false;
};
VertexLink vertex_link(const Surface& surface, VertexId p);

/// Simple cycle through S(p) - {p}, following the stored orientation
/// of the first incident cell. Inner, regular vertices only.
std::vector<VertexId> link_cycle(const Surface& surface, VertexId p);

/// Rewrites cell orders so that every interior edge is traversed in opposite
/// directions by its two cells. The lowest-numbered cell keeps its order.
Surface orient(const Surface& surface);

/// True iff every interior edge is traversed once in each direction.
bool is_consistently_oriented(const Surface& surface);

struct Boundary {
  std::vector<Edge> edges;
  std::vector<VertexId> vertices;
};
Boundary boundary(const Surface& surface);

/// Rotation of `cycle` that starts at its smallest vertex, direction kept.
std::vector<VertexId> canonical_rotation(std::span<const VertexId> cycle);
/// Lexicographically smaller of the canonical rotations of both directions.
std::vector<VertexId> canonical_cycle_undirected(std::span<const VertexId> cycle);

}  // namespace djc
