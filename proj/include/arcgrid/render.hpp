#pragma once

#include <string>

#include "arcgrid/grid.hpp"

namespace arcgrid {

// Deterministic SVG: light grid lines over the model's bounding box, then
// one polyline per path.  Paths are ordered by id; the i-th gets a palette
// color and a small diagonal translation (distinct per path), which offsets
// every axis-aligned segment perpendicularly so coincident edges stay
// visible.  Byte-identical output for identical input.
std::string render_svg(const GridModel& m);

// Character sketch on a half-step canvas: '-' and '|' for traversed edges,
// '+' at lattice points a path visits, '.' elsewhere on the lattice.
std::string render_ascii(const GridModel& m);

} // namespace arcgrid
