#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coverdecomp/geometry.hpp"

namespace covdec {

// Finite point set; all points pairwise distinct.
using PointSet = std::vector<Point>;

enum class Prec { Less, Greater, Incomparable };

// Linear scaffolding of one wedge over one point set. With
//   key_s(q) = cross(q, dir_next) * sgn(D),  key_t(q) = cross(dir_prev, q) * sgn(D),
//   D = cross(dir_prev, dir_next),
// membership becomes dominance:
//   q in closed E_i(p)  <=>  key_s(q) >= key_s(p) and key_t(q) >= key_t(p)
//   q in open  E_i(p)  <=>  both strict.
// rank_s / rank_t are dense ranks of the distinct key values, so all sweeps
// after construction run on plain integers.
struct WedgeFrame {
    int index = 1;       // 1-based wedge index
    Dir dir_prev, dir_next;
    int sign_d = 1;      // sign of cross(dir_prev, dir_next)
    std::vector<Rat> key_s, key_t;      // per point id
    std::vector<int> rank_s, rank_t;    // per point id
    std::vector<Rat> values_s, values_t;  // distinct key values, ascending
};

std::vector<WedgeFrame> build_wedge_frames(const PointSet& h, const Polygon& s);

// Ids of subset points that are E_i-boundary within the subset, unsorted.
std::vector<int> boundary_ids_of_subset(const WedgeFrame& frame, const std::vector<int>& subset,
                                        Closedness c);

struct BoundaryEntry {
    Point point;
    std::set<int> wedge_indices;  // original 1-based indices i with point in B_i
    int type = 0;                 // smallest such i
    bool singular = false;
    bool rich = false;
};

struct CyclicEntry {
    int point_id = 0;
    int norm_type = 0;   // segment index after rotation normalization
    int orig_type = 0;
    bool from_singular_dup = false;
};

struct BoundaryStructure {
    Polygon polygon;
    Closedness closedness = Closedness::Closed;
    PointSet points;                          // the input H
    std::vector<WedgeFrame> frames;           // size 2n, frames[i-1] for wedge i
    std::vector<std::vector<int>> per_wedge;  // per_wedge[i-1]: ids of B_i sorted by prec_i
    std::vector<std::set<int>> wedge_sets;    // per point id; empty = interior point
    std::vector<CyclicEntry> cyclic;          // B' with singular points duplicated
    std::vector<int> boundary_ids;            // ascending point ids
    std::map<Point, BoundaryEntry> entries;
    int rotation = 0;                         // 0 when no singular points
    std::pair<int, int> singular_pair{0, 0};  // original indices {i, i+n}, or {0,0}

    int norm_index(int original) const;
    int orig_index(int normalized) const;
    const BoundaryEntry& entry(const Point& p) const;
    bool is_boundary(int point_id) const { return !wedge_sets[static_cast<std::size_t>(point_id)].empty(); }
};

// E_i-boundary points of h, sorted by prec_i. Sort-and-sweep path.
std::vector<Point> compute_boundary_i(const PointSet& h, const Polygon& s, int i, Closedness c);

// Quadratic definition-test baseline; the sweep must agree with it.
std::vector<Point> compute_boundary_i_quadratic(const PointSet& h, const Polygon& s, int i,
                                                Closedness c);

// Exact realization of the projection order on E_i-boundary points:
// Less iff q - p lies in the closed cone spanned by dir_prev_i and
// -dir_next_i (minus the origin). Incomparable never occurs for genuine
// boundary points of one set.
Prec order_prec(const Polygon& s, int i, const Point& p, const Point& q);

// p is singular iff its wedge-index set, read cyclically on [1, 2n], is not
// a contiguous cyclic arc. Verifies that every singular set is an opposite
// pair {i, i+n} and all singular points share the same pair.
std::set<Point> detect_singular(const std::map<Point, std::set<int>>& wedge_sets, int n);

BoundaryStructure assemble_cyclic(const PointSet& h, const Polygon& s, Closedness c);

// Maximal cyclic runs of the cyclic sequence whose points lie in w, as
// (start position, length) pairs.
std::vector<std::pair<int, int>> wedge_trace_intervals(const BoundaryStructure& b,
                                                       const WedgePlacement& w);

// Rich points: boundary points isolable by some wedge placement that also
// captures at least one interior point. Complete over the placement family.
std::set<Point> detect_rich(const PointSet& h, const Polygon& s, Closedness c,
                            const BoundaryStructure& b);

struct LevelDecomposition {
    std::vector<PointSet> levels;
    std::map<Point, int> level_of;
};

// Iterated boundary peeling with respect to the S'-wedges (Open).
LevelDecomposition level_peel(const PointSet& h, const Polygon& s);

void require_distinct(const PointSet& h);

}  // namespace covdec
