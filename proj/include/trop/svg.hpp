#pragma once

#include <string>

#include "trop/rigidity.hpp"
#include "trop/tropcurve.hpp"

namespace trop {

// Deterministic SVG renderings. The viewbox is the bounding box of the
// bounded features padded by 20% (unit box fallback for degenerate
// boxes); rays and lines are clipped at the box. Weights above 1 are
// labelled.
std::string render_curve_svg(const Curve& c);
std::string render_subdivision_svg(const DualSubdivision& sd);
std::string render_framework_svg(const Framework& fw, bool lattice_overlay);

}  // namespace trop
