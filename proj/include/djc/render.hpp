#pragma once

#include <array>
#include <string>
#include <vector>

#include "djc/contraction.hpp"
#include "djc/planar.hpp"
#include "djc/surface.hpp"

namespace djc {

using Layout = std::vector<std::array<double, 2>>;

/// Barycentric layout of a disk: the boundary cycle on the unit circle, every
/// interior vertex at the mean of its neighbours. Throws NoCoordinates when the
/// surface is closed or its boundary is not a single cycle.
Layout tutte_layout(const Surface& surface);
Layout layout_of(const EmbeddedComplex& embedded);

/// Cells as polygons, `curves` as thick red strokes, `shaded` cells filled.
/// Fixed-precision output, so equal inputs give equal bytes.
std::string render_svg(const Surface& surface, const Layout& layout, const std::vector<Path>& curves,
                       const std::vector<CellId>& shaded = {});

/// One frame per entry of the sequence; frame i > 0 shades removed[i - 1].
std::vector<std::string> render_sequence(const Surface& surface, const Layout& layout,
                                         const DeformationSequence& sequence);

}  // namespace djc
