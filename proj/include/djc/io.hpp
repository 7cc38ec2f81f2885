#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "djc/contraction.hpp"
#include "djc/curves.hpp"
#include "djc/jordan.hpp"
#include "djc/planar.hpp"
#include "djc/surface.hpp"

namespace djc {

/// Everything a text file may carry:
///   f v1 v2 ... vk        one 2-cell
///   c v1 ... vk [closed]  a curve
///   coord v x y           vertex coordinates (exact rationals)
///   p x y                 polygon vertex
/// '#' starts a comment. Vertices are implicit: the count is one more than
/// the largest id used by a cell or a coord line.
struct SceneFile {
  Surface surface;
  std::vector<Path> curves;
  std::vector<std::pair<VertexId, Point2>> coords;
  std::vector<Point2> polygon;
};

/// Throws Parse with the offending line number.
SceneFile parse_scene(std::string_view text);

/// Cells rotated to start at their smallest vertex (orientation kept) and
/// sorted lexicographically.
std::string write_surface(const Surface& surface);
std::string write_curve(const Path& curve);
std::string write_polygon(const std::vector<Point2>& polygon);
/// Surface, one coord line per vertex, then the curves.
std::string write_embedded(const EmbeddedComplex& embedded, const std::vector<Path>& curves);
/// Needs a coord line for every vertex of the surface. Throws Parse.
EmbeddedComplex embedded_from_scene(const SceneFile& scene);

struct SeparationText {
  std::vector<std::vector<VertexId>> components;
  VertexId seed_a = -1;
  VertexId seed_b = -1;
  std::string verdict;
};
std::string write_separation(const SeparationReport& report, Verdict verdict);
SeparationText parse_separation(std::string_view text);

/// `step <i>: v...` per entry (with a trailing ` closed` for cycles) and
/// `witness <i>: <cell>` per step. distance_kept is not stored; parsing
/// leaves it empty.
std::string write_sequence(const DeformationSequence& sequence);
DeformationSequence parse_sequence(std::string_view text);

/// Throw Io.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace djc
