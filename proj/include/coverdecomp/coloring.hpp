#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coverdecomp/boundary.hpp"

namespace covdec {

enum class BWColor { Black, White };
enum class RBColor { Red, Blue };

struct Step1Pick {
    Point point;
    int level = 0;
    RBColor color = RBColor::Red;
};

struct ColoringResult {
    std::map<Point, RBColor> rb;                       // total on the input set
    std::map<std::pair<int, Point>, BWColor> bw_audit; // (stage or level, point)
    // Single coloring: stage 1..4 (first boundary, second, third, quadtree).
    // Multiple coloring: 0-based peel level.
    std::map<Point, int> level_audit;
    std::set<Point> rich_audit;
    std::vector<Step1Pick> step1_audit;  // multiple coloring only
    std::string note;
};

// Finite black/white coloring of the cyclic boundary sequence. Guarantees,
// cyclically for length >= 3: no two consecutive Black entries and no three
// consecutive White entries. Singular points are colored first, alternating
// along prec_1 starting Black; runs of regular points follow the alternating
// pattern with seam adjustments. Length 1 -> White; length 2 -> Black, White.
std::map<Point, BWColor> bw_boundary_coloring(const BoundaryStructure& b);

// Four-step red/blue coloring of a finite point set:
//   1. boundary w.r.t. closed wedges, blue iff rich-or-White;
//   2. boundary of the interior points (closed), all red;
//   3. boundary of the rest w.r.t. the open S'-wedges, blue iff White;
//   4. deterministic quadtree on the remaining points.
ColoringResult red_blue_coloring(const PointSet& h, const Polygon& s);

// Deterministic recursive subdivision. Squares holding <= 2 points color
// their uncolored points red and stop; otherwise the lexicographically least
// uncolored point turns red, the next blue, and all four quadrants recurse.
// Points on shared quadrant edges go to the lexicographically least
// containing quadrant.
std::map<Point, RBColor> quadtree_color(const PointSet& h4, const Rect& square);

// Level-peeling variant: Step 1 walks the breadth-first square list coloring
// alternately red/blue points whose peel level exceeds the last colored
// level by >= 3 and stops at the first ineligible step; then even levels get
// blue iff rich-or-White, odd levels the swapped roles.
ColoringResult multiple_red_blue(const PointSet& h, const Polygon& s);

}  // namespace covdec
