#pragma once

#include "toricpack/polytope.hpp"
#include "toricpack/simplex.hpp"

#include <string>
#include <vector>

namespace toricpack {

/// Deterministic SVG 1.1 picture of a 2-dimensional polytope: outline,
/// the lattice points of its bounding box, and optionally a family of
/// shaded packing simplices. Byte-identical output for identical input.
/// Throws Error("RenderDimension") unless dim == 2.
std::string render_svg(const Polytope& p, const std::vector<OpenSimplex>& witness = {});

} // namespace toricpack
