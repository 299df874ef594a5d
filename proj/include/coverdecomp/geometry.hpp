#pragma once

#include <string>
#include <vector>

#include "coverdecomp/rat.hpp"

namespace covdec {

enum class Ordering { Less, Equal, Greater };

// Closed models S and its wedges; Open models S' (S minus its boundary) and
// the S'-wedges.
enum class Closedness { Closed, Open };

struct Point {
    Rat x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // Lexicographic; used for deterministic picks and ordered containers.
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

// A nonzero direction vector. Two Dirs are angle-equal iff one is a positive
// scalar multiple of the other.
struct Dir {
    Rat dx, dy;

    Dir() = default;
    Dir(Rat x, Rat y);
    Dir operator-() const { return Dir(-dx, -dy); }
    bool operator==(const Dir& o) const;
};

Rat cross(const Dir& a, const Dir& b);
Rat cross(const Dir& a, const Point& u);
Point sub(const Point& a, const Point& b);

// Total order on direction classes by clockwise angle from the positive
// x axis (so (1,0) < (0,-1) < (-1,0) < (0,1)).
Ordering arg_cmp(const Dir& a, const Dir& b);

// Closed, strictly convex, centrally symmetric polygon with 2n vertices in
// clockwise order. Counterclockwise input is rejected, not reversed.
class Polygon {
public:
    // Empty and unusable until assigned from from_vertices.
    Polygon() = default;

    static Polygon from_vertices(std::vector<Point> vertices);

    int half_n() const { return static_cast<int>(vertices_.size() / 2); }    // n
    int side_count() const { return static_cast<int>(vertices_.size()); }    // 2n
    // 1-based, understood modulo 2n.
    const Point& vertex(int i) const;
    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& centroid() const { return centroid_; }

    void bounding_box(Rat& xmin, Rat& xmax, Rat& ymin, Rat& ymax) const;

private:
    std::vector<Point> vertices_;
    Point centroid_;
};

struct WedgeTemplate {
    int index = 1;  // 1-based vertex index in [1, 2n]
    Dir dir_prev;   // direction v_i -> v_{i-1}
    Dir dir_next;   // direction v_i -> v_{i+1}
    Closedness closedness = Closedness::Closed;
};

struct WedgePlacement {
    WedgeTemplate tmpl;
    Point apex;
};

// Indices above 2n wrap around (they are understood modulo 2n); i < 1 is
// rejected.
WedgeTemplate wedge_of_vertex(const Polygon& s, int i, Closedness c);

// Closed: u = p - apex lies in the closed cone spanned by dir_prev and
// dir_next (apex included). Open: strictly inside (apex and boundary rays
// excluded). Two cross-product sign tests.
bool wedge_contains(const WedgePlacement& w, const Point& p);

// Membership of p in the translate of s whose center sits at `center`.
bool polygon_contains(const Polygon& s, const Point& center, const Point& p, Closedness c);

// Squared Euclidean distance between two closed segments.
Rat segment_sq_dist(const Point& a0, const Point& a1, const Point& b0, const Point& b1);

// Smallest squared distance between any two non-adjacent sides of s.
Rat min_nonadjacent_side_sq_dist(const Polygon& s);

// A certified grid cell side x > 0: 2*x^2 is strictly below the minimum
// squared distance between non-adjacent sides, so a square of side x meets
// at most two consecutive sides of s. Deterministically the largest power of
// two satisfying the inequality.
Rat grid_cell_size(const Polygon& s);

// Upper bound k' on the number of grid cells of side x any translate of s
// can intersect: (ceil(w/x)+1) * (ceil(h/x)+1) over the bounding box.
long long squares_per_translate(const Polygon& s, const Rat& x);

struct GridParams {
    Rat cell_side;                    // x
    long long squares_per_translate;  // k'
    long long fold_constant;          // k = 9 * k'
};

GridParams grid_params(const Polygon& s);

// Axis-aligned rational rectangle, possibly degenerate.
struct Rect {
    Rat x_min, x_max, y_min, y_max;

    static Rect make(Rat x0, Rat x1, Rat y0, Rat y1);
    Rat width() const { return x_max - x_min; }
    Rat height() const { return y_max - y_min; }
    bool contains(const Point& p) const;
    Point center() const;
};

// Closed intersection test between a translate of s centered at `center`
// and an axis-aligned box (separating axis over box axes + edge normals).
bool polygon_box_intersects(const Polygon& s, const Point& center, const Rect& box);

// Intersection with the half-open grid cell [x_min, x_max) x [y_min, y_max),
// the convention grid bucketing uses.
bool polygon_halfopen_cell_intersects(const Polygon& s, const Point& center, const Rect& cell);

// Whether the translate of s centered at `center` contains the whole box.
bool polygon_contains_box(const Polygon& s, const Point& center, const Rect& box);

// Built-in fixtures: "square", "hexagon", "octagon".
Polygon builtin_polygon(const std::string& name);

}  // namespace covdec
