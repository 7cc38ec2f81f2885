#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "djc/curves.hpp"
#include "djc/surface.hpp"

namespace djc {

enum class SurfaceKind { Octahedron, Icosahedron, Disk, Fan, TorusGrid, Annulus, Moebius };

struct GenSpec {
  SurfaceKind kind = SurfaceKind::Octahedron;
  int a = 0;  // Disk: rings; Fan: n; TorusGrid: m; Annulus: cells
  int b = 0;  // TorusGrid: n
  std::uint64_t seed = 0;
};

struct Generated {
  Surface surface;
  std::map<std::string, Path> curves;
};

/// Seed 0 keeps the natural numbering; other seeds apply a seeded relabeling.
/// Parameter ranges: Disk rings in [1, 50]; Fan n in [3, 4096];
/// TorusGrid m, n in [3, 64]; Annulus cells even in [6, 4096].
Generated generate(const GenSpec& spec);

/// Parses "octahedron", "icosahedron", "disk", "fan", "torus", "annulus",
/// "moebius". Throws BadParameters.
SurfaceKind parse_kind(const std::string& name);
std::string to_string(SurfaceKind kind);

struct CurveBounds {
  int min_length = 3;
  int max_length = 1 << 20;
  int budget = 2000;  // attempts before BudgetExhausted
};

/// Boundary of a random edge-connected cluster of cells that avoids the
/// surface boundary, oriented like the cluster's cells. Retries until the
/// result is a DiscreteCurve within the bounds.
Path random_curve(const Surface& surface, std::uint64_t seed, const CurveBounds& bounds = {});

}  // namespace djc
