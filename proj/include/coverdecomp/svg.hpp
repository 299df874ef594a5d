#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coverdecomp/boundary.hpp"
#include "coverdecomp/coloring.hpp"

namespace covdec {

// Static debug figure. Coordinates are rendered in floating point; this is
// the only lossy output surface.
struct RenderSpec {
    Polygon polygon;
    PointSet points;
    std::map<Point, RBColor> colors;          // uncolored points render gray
    std::optional<BoundaryStructure> boundary;  // cyclic polyline when present
    std::vector<Point> translate_centers;     // translates at 40% opacity
    std::vector<WedgePlacement> wedges;
    std::optional<Rect> region;
};

std::string render_svg(const RenderSpec& spec);

}  // namespace covdec
