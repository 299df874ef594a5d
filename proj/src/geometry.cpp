#include "coverdecomp/geometry.hpp"

#include <algorithm>
#include <optional>

#include "coverdecomp/errors.hpp"

namespace covdec {

Dir::Dir(Rat x, Rat y) : dx(std::move(x)), dy(std::move(y)) {
    if (dx.sign() == 0 && dy.sign() == 0) throw ParseError("zero direction vector");
}

bool Dir::operator==(const Dir& o) const { return arg_cmp(*this, o) == Ordering::Equal; }

Rat cross(const Dir& a, const Dir& b) { return a.dx * b.dy - a.dy * b.dx; }
Rat cross(const Dir& a, const Point& u) { return a.dx * u.y - a.dy * u.x; }
Point sub(const Point& a, const Point& b) { return Point{a.x - b.x, a.y - b.y}; }

namespace {

// Half-turn index along the clockwise sweep from (1,0): 0 covers angles in
// [0, pi), 1 covers [pi, 2pi).
int cw_half(const Dir& d) {
    const int sy = d.dy.sign();
    if (sy < 0) return 0;
    if (sy > 0) return 1;
    return d.dx.sign() > 0 ? 0 : 1;
}

}  // namespace

Ordering arg_cmp(const Dir& a, const Dir& b) {
    const int ha = cw_half(a), hb = cw_half(b);
    if (ha != hb) return ha < hb ? Ordering::Less : Ordering::Greater;
    const int s = cross(a, b).sign();
    if (s < 0) return Ordering::Less;  // b is further clockwise within the half-turn
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

Polygon Polygon::from_vertices(std::vector<Point> vertices) {
    const std::size_t m = vertices.size();
    if (m < 4 || m % 2 != 0)
        throw ParseError("polygon needs 2n vertices with n >= 2, got " + std::to_string(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (vertices[i] == vertices[j]) throw ParseError("polygon has duplicate vertices");

    // Strict convexity with clockwise orientation: every consecutive triple
    // turns strictly clockwise (negative cross product).
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % m];
        const Point& c = vertices[(i + 2) % m];
        const Rat turn = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if (turn.sign() > 0)
            throw ParseError("polygon vertices are not in clockwise order");
        if (turn.sign() == 0)
            throw ParseError("polygon is not strictly convex (collinear vertices)");
    }

    Rat sx(0), sy(0);
    for (const Point& v : vertices) { sx += v.x; sy += v.y; }
    const Rat inv(1, static_cast<long long>(m));
    Point c{sx * inv, sy * inv};

    const std::size_t n = m / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const Point mirror{c.x + c.x - vertices[i].x, c.y + c.y - vertices[i].y};
        if (!(vertices[i + n] == mirror))
            throw ParseError("polygon is not centrally symmetric");
    }

    Polygon p;
    p.vertices_ = std::move(vertices);
    p.centroid_ = std::move(c);
    return p;
}

const Point& Polygon::vertex(int i) const {
    const int m = side_count();
    int k = (i - 1) % m;
    if (k < 0) k += m;
    return vertices_[static_cast<std::size_t>(k)];
}

void Polygon::bounding_box(Rat& xmin, Rat& xmax, Rat& ymin, Rat& ymax) const {
    xmin = xmax = vertices_[0].x;
    ymin = ymax = vertices_[0].y;
    for (const Point& v : vertices_) {
        xmin = Rat::min(xmin, v.x);
        xmax = Rat::max(xmax, v.x);
        ymin = Rat::min(ymin, v.y);
        ymax = Rat::max(ymax, v.y);
    }
}

WedgeTemplate wedge_of_vertex(const Polygon& s, int i, Closedness c) {
    if (i < 1) throw ParseError("wedge index out of range: " + std::to_string(i));
    i = (i - 1) % s.side_count() + 1;
    const Point& v = s.vertex(i);
    const Point& prev = s.vertex(i - 1);
    const Point& next = s.vertex(i + 1);
    WedgeTemplate t;
    t.index = i;
    t.dir_prev = Dir(prev.x - v.x, prev.y - v.y);
    t.dir_next = Dir(next.x - v.x, next.y - v.y);
    t.closedness = c;
    return t;
}

bool wedge_contains(const WedgePlacement& w, const Point& p) {
    const Point u = sub(p, w.apex);
    // u = a*dir_prev + b*dir_next with d = cross(dir_prev, dir_next) != 0:
    //   a*d = cross(u, dir_next) ... via cross(dir_next, u) = -a*d
    //   b*d = cross(dir_prev, u)
    const int sd = cross(w.tmpl.dir_prev, w.tmpl.dir_next).sign();
    const int sa = -cross(w.tmpl.dir_next, u).sign() * sd;
    const int sb = cross(w.tmpl.dir_prev, u).sign() * sd;
    if (w.tmpl.closedness == Closedness::Closed) return sa >= 0 && sb >= 0;
    return sa > 0 && sb > 0;
}

bool polygon_contains(const Polygon& s, const Point& center, const Point& p, Closedness c) {
    const Point off{center.x - s.centroid().x, center.y - s.centroid().y};
    const int m = s.side_count();
    for (int i = 0; i < m; ++i) {
        const Point& a = s.vertices()[static_cast<std::size_t>(i)];
        const Point& b = s.vertices()[static_cast<std::size_t>((i + 1) % m)];
        // Clockwise polygon: interior is where cross(edge, p - a) <= 0.
        const Rat side = (b.x - a.x) * (p.y - a.y - off.y) - (b.y - a.y) * (p.x - a.x - off.x);
        if (c == Closedness::Closed ? side.sign() > 0 : side.sign() >= 0) return false;
    }
    return true;
}

namespace {

Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

Rat point_segment_sq_dist(const Point& p, const Point& a, const Point& b) {
    const Point ab = sub(b, a);
    const Point ap = sub(p, a);
    const Rat len2 = dot(ab, ab);
    Rat t = dot(ap, ab) / len2;
    if (t.sign() < 0) t = Rat(0);
    if (t > Rat(1)) t = Rat(1);
    const Point q{a.x + t * ab.x, a.y + t * ab.y};
    const Point d = sub(p, q);
    return dot(d, d);
}

int orient(const Point& a, const Point& b, const Point& c) {
    return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign();
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    const auto on = [](const Point& p, const Point& q, const Point& r) {
        return orient(p, q, r) == 0 && Rat::min(p.x, q.x) <= r.x && r.x <= Rat::max(p.x, q.x) &&
               Rat::min(p.y, q.y) <= r.y && r.y <= Rat::max(p.y, q.y);
    };
    return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

}  // namespace

Rat segment_sq_dist(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
    if (segments_intersect(a0, a1, b0, b1)) return Rat(0);
    Rat best = point_segment_sq_dist(a0, b0, b1);
    best = Rat::min(best, point_segment_sq_dist(a1, b0, b1));
    best = Rat::min(best, point_segment_sq_dist(b0, a0, a1));
    best = Rat::min(best, point_segment_sq_dist(b1, a0, a1));
    return best;
}

Rat min_nonadjacent_side_sq_dist(const Polygon& s) {
    const int m = s.side_count();
    bool have = false;
    Rat best(0);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            // Sides i and j are adjacent when they share a vertex.
            if (j == i + 1 || (i == 0 && j == m - 1)) continue;
            const Rat d = segment_sq_dist(s.vertex(i + 1), s.vertex(i + 2),
                                          s.vertex(j + 1), s.vertex(j + 2));
            if (!have || d < best) { best = d; have = true; }
        }
    }
    if (!have || best.sign() == 0)
        throw StructuralViolation("degenerate polygon: non-adjacent sides touch");
    return best;
}

Rat grid_cell_size(const Polygon& s) {
    const Rat d2 = min_nonadjacent_side_sq_dist(s);
    // Largest x = 2^t with 2*x^2 < d2.
    Rat x(1);
    const Rat two(2);
    if (two * x * x < d2) {
        while (true) {
            const Rat nx = x * two;
            if (!(two * nx * nx < d2)) break;
            x = nx;
        }
    } else {
        do { x = x / two; } while (!(two * x * x < d2));
    }
    return x;
}

long long squares_per_translate(const Polygon& s, const Rat& x) {
    if (x.sign() <= 0) throw ParseError("grid cell side must be positive");
    Rat xmin, xmax, ymin, ymax;
    s.bounding_box(xmin, xmax, ymin, ymax);
    const mpz_class cw = ((xmax - xmin) / x).ceil() + 1;
    const mpz_class ch = ((ymax - ymin) / x).ceil() + 1;
    const mpz_class k = cw * ch;
    if (!k.fits_slong_p()) throw SizeBound("squares_per_translate overflow");
    return k.get_si();
}

GridParams grid_params(const Polygon& s) {
    GridParams g;
    g.cell_side = grid_cell_size(s);
    g.squares_per_translate = squares_per_translate(s, g.cell_side);
    g.fold_constant = 9 * g.squares_per_translate;
    return g;
}

Rect Rect::make(Rat x0, Rat x1, Rat y0, Rat y1) {
    if (x1 < x0 || y1 < y0) throw ParseError("rectangle with negative extent");
    return Rect{std::move(x0), std::move(x1), std::move(y0), std::move(y1)};
}

bool Rect::contains(const Point& p) const {
    return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max;
}

Point Rect::center() const {
    const Rat half(1, 2);
    return Point{(x_min + x_max) * half, (y_min + y_max) * half};
}

namespace {

void project_polygon(const Polygon& s, const Point& off, const Dir& axis, Rat& lo, Rat& hi) {
    bool first = true;
    for (const Point& v : s.vertices()) {
        const Rat val = axis.dx * (v.x + off.x) + axis.dy * (v.y + off.y);
        if (first) { lo = hi = val; first = false; }
        else { lo = Rat::min(lo, val); hi = Rat::max(hi, val); }
    }
}

void project_box(const Rect& box, const Dir& axis, Rat& lo, Rat& hi) {
    bool first = true;
    for (int cx = 0; cx < 2; ++cx)
        for (int cy = 0; cy < 2; ++cy) {
            const Rat val = axis.dx * (cx ? box.x_max : box.x_min) +
                            axis.dy * (cy ? box.y_max : box.y_min);
            if (first) { lo = hi = val; first = false; }
            else { lo = Rat::min(lo, val); hi = Rat::max(hi, val); }
        }
}

}  // namespace

bool polygon_box_intersects(const Polygon& s, const Point& center, const Rect& box) {
    const Point off{center.x - s.centroid().x, center.y - s.centroid().y};
    // Box axes.
    Rat pxmin, pxmax, pymin, pymax;
    s.bounding_box(pxmin, pxmax, pymin, pymax);
    if (pxmax + off.x < box.x_min || box.x_max < pxmin + off.x) return false;
    if (pymax + off.y < box.y_min || box.y_max < pymin + off.y) return false;
    // Polygon edge normals.
    const int m = s.side_count();
    for (int i = 0; i < m; ++i) {
        const Point& a = s.vertices()[static_cast<std::size_t>(i)];
        const Point& b = s.vertices()[static_cast<std::size_t>((i + 1) % m)];
        const Dir normal(b.y - a.y, a.x - b.x);
        Rat plo, phi, blo, bhi;
        project_polygon(s, off, normal, plo, phi);
        project_box(box, normal, blo, bhi);
        if (phi < blo || bhi < plo) return false;
    }
    return true;
}

namespace {

// Smallest x attained by the translate inside the horizontal strip
// lo <= y <= hi; candidates are vertices in the strip and edge crossings of
// the strip boundaries.
std::optional<Rat> min_coord_in_strip(const Polygon& s, const Point& off, bool x_of_y_strip,
                                      const Rat& lo, const Rat& hi) {
    const auto coord = [&](const Point& p) { return x_of_y_strip ? p.x : p.y; };
    const auto other = [&](const Point& p) { return x_of_y_strip ? p.y : p.x; };
    std::optional<Rat> best;
    const auto offer = [&](const Rat& v) {
        if (!best || v < *best) best = v;
    };
    const int m = s.side_count();
    for (int i = 0; i < m; ++i) {
        const Point a{s.vertices()[static_cast<std::size_t>(i)].x + off.x,
                      s.vertices()[static_cast<std::size_t>(i)].y + off.y};
        const Point b{s.vertices()[static_cast<std::size_t>((i + 1) % m)].x + off.x,
                      s.vertices()[static_cast<std::size_t>((i + 1) % m)].y + off.y};
        if (lo <= other(a) && other(a) <= hi) offer(coord(a));
        for (const Rat& yy : {lo, hi}) {
            const Rat oa = other(a), ob = other(b);
            if (oa == ob) continue;
            if (Rat::min(oa, ob) <= yy && yy <= Rat::max(oa, ob))
                offer(coord(a) + (coord(b) - coord(a)) * (yy - oa) / (ob - oa));
        }
    }
    return best;
}

}  // namespace

bool polygon_halfopen_cell_intersects(const Polygon& s, const Point& center, const Rect& cell) {
    if (!polygon_box_intersects(s, center, cell)) return false;
    // The closed intersection K is nonempty and convex; the half-open cell
    // misses it only when K lies entirely on the excluded right or top edge.
    const Point off{center.x - s.centroid().x, center.y - s.centroid().y};
    const auto minx = min_coord_in_strip(s, off, true, cell.y_min, cell.y_max);
    if (minx && Rat::max(*minx, cell.x_min) == cell.x_max) return false;
    const auto miny = min_coord_in_strip(s, off, false, cell.x_min, cell.x_max);
    if (miny && Rat::max(*miny, cell.y_min) == cell.y_max) return false;
    return true;
}

bool polygon_contains_box(const Polygon& s, const Point& center, const Rect& box) {
    return polygon_contains(s, center, Point{box.x_min, box.y_min}, Closedness::Closed) &&
           polygon_contains(s, center, Point{box.x_min, box.y_max}, Closedness::Closed) &&
           polygon_contains(s, center, Point{box.x_max, box.y_min}, Closedness::Closed) &&
           polygon_contains(s, center, Point{box.x_max, box.y_max}, Closedness::Closed);
}

Polygon builtin_polygon(const std::string& name) {
    const auto pt = [](long long x, long long y) { return Point{Rat(x), Rat(y)}; };
    if (name == "square")
        return Polygon::from_vertices({pt(0, 1), pt(1, 1), pt(1, 0), pt(0, 0)});
    if (name == "hexagon")
        return Polygon::from_vertices(
            {pt(0, 2), pt(2, 1), pt(2, -1), pt(0, -2), pt(-2, -1), pt(-2, 1)});
    if (name == "octagon")
        return Polygon::from_vertices({pt(-1, 2), pt(1, 2), pt(2, 1), pt(2, -1), pt(1, -2),
                                       pt(-1, -2), pt(-2, -1), pt(-2, 1)});
    throw ParseError("unknown built-in polygon: " + name);
}

}  // namespace covdec
