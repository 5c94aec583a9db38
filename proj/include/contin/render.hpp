#pragma once

#include <string>

#include "contin/complex.hpp"

namespace contin {

/// Deterministic SVG of a 2-D complex (3-D complexes drop the last axis).
/// Points become <circle>, segments <line> or, when a logistic chart bends
/// them, <path> with `samples` pieces, and rects <rect>. Each element has
/// class="cell <role>" plus the side name for stripe cells. Throws
/// std::invalid_argument for dim > 3.
std::string render_svg(const GeoComplex& c, int samples = 64);

}  // namespace contin
