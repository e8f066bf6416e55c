#pragma once

#include <vector>

#include "fibdyn/raster.hpp"

namespace fibdyn {

// Closed level curves of the inside indicator (tag != Escaped), extracted by
// marching squares over pixel centers with edge-midpoint vertices. Saddle cells
// are split so that the diagonally adjacent inside corners stay connected.
// Open chains (those leaving the grid) are discarded.
std::vector<std::vector<Complex>> extract_closed_contours(const RasterGrid& grid);

// Renders the filled set of f = z at parameter c on [-2,2]^2 at the given
// resolution and returns the longest closed boundary curve. resolution >= 64
// required; throws NoContour when nothing closes.
std::vector<Complex> trace_boundary(Complex c, int resolution, int budget);

// Symmetric Hausdorff distance between a closed polyline and the unit circle:
// the worst vertex deviation from modulus 1 against the worst gap from 4096
// circle samples to the polyline's segments.
double hausdorff_distance_to_unit_circle(const std::vector<Complex>& poly);

// k,re,im rows with %.17g reals.
void write_polyline_csv(const std::vector<Complex>& poly, const std::string& path);

} // namespace fibdyn
