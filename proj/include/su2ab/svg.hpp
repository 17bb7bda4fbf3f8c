#pragma once

#include <string>

#include "su2ab/pieces.hpp"

namespace su2ab {

// Renders A (blue), H (red), P (light blue) into the unit square,
// 512x512 viewBox, axis ticks at pi. Deterministic byte output; every
// drawn element carries its exact rational data in a data-exact attribute.
std::string render_triple_svg(const BoundaryTriple& t, const std::string& title);

}  // namespace su2ab
