#pragma once

#include <map>
#include <string>
#include <vector>

#include "coverdecomp/coloring.hpp"
#include "coverdecomp/geometry.hpp"

namespace covdec {

// Ground-truth checkers. Everything here derives its own predicates from
// Rat/Point so that it stays an independent code path from the boundary and
// coloring modules it verifies.

struct PlacementSample {
    Point apex;
    int wedge_index = 1;
    Closedness closedness = Closedness::Closed;
    std::vector<Point> trace;  // E_i(apex) ∩ H, lexicographically sorted
};

// Complete enumeration of the combinatorially distinct traces of wedge i
// over h: one representative apex per realizable trace, built from the
// arrangement of the 2|h| lines through the points in the two wedge edge
// directions (a two-family grid, so faces are threshold boxes). Includes the
// empty trace. Traces are deduplicated.
std::vector<PlacementSample> enumerate_wedge_placements(const PointSet& h, const Polygon& s,
                                                        int i, Closedness c,
                                                        std::size_t bound = 400);

// Checks that every realizable trace with at least m points contains both
// colors, over the complete trace family of every wedge index. Returns the
// violating traces (deduplicated); empty means pass.
std::vector<PlacementSample> verify_coloring(const PointSet& h, const Polygon& s,
                                             const std::map<Point, RBColor>& rb, int m);

struct DepthReport {
    long long min_depth = 0;
    Point witness;
};

// Exact minimum, over the rectangle, of the number of translates containing
// a point. Branch-and-bound over boxes with exact local arrangement sampling
// at the leaves.
DepthReport coverage_depth(const Polygon& s, const std::vector<Point>& centers, const Rect& r,
                           Closedness c);

// Certified threshold check: true iff every point of r lies in at least
// `fold` translates; on failure *witness (if given) is a point of depth
// < fold.
bool coverage_at_least(const Polygon& s, const std::vector<Point>& centers, const Rect& r,
                       Closedness c, long long fold, Point* witness = nullptr);

struct ClaimRow {
    std::string claim;
    bool pass = true;
    std::string detail;
};

struct ClaimReport {
    std::vector<ClaimRow> rows;
    bool all_pass() const;
    const ClaimRow& row(const std::string& claim) const;
};

// Re-verifies every boundary-structure claim against brute-force
// recomputation: definition soundness, totality and injectivity of the
// projection order, the shared-boundary halfplane claim, closed-case
// uniqueness, the singular-pair claims, the prec reversal for singular
// points, the two-interval property, and the floating-point projection
// cross-check of the cone order.
ClaimReport check_claims(const PointSet& h, const Polygon& s, Closedness c);

}  // namespace covdec
