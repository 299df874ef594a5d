#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "coverdecomp/errors.hpp"
#include "coverdecomp/geometry.hpp"

using namespace covdec;

namespace {

Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }
Point ptr(const char* x, const char* y) { return Point{Rat::parse(x), Rat::parse(y)}; }

}  // namespace

TEST_CASE("arg_cmp axis examples") {
    CHECK(arg_cmp(Dir(Rat(1), Rat(0)), Dir(Rat(0), Rat(-1))) == Ordering::Less);
    CHECK(arg_cmp(Dir(Rat(2), Rat(0)), Dir(Rat(1), Rat(0))) == Ordering::Equal);
    CHECK(arg_cmp(Dir(Rat(0), Rat(1)), Dir(Rat(-1), Rat(0))) == Ordering::Greater);
}

TEST_CASE("arg_cmp is a total order on direction classes") {
    std::vector<Dir> dirs;
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y)
            if (x != 0 || y != 0) dirs.emplace_back(Rat(x), Rat(y));
    const auto ord = [&](const Dir& a, const Dir& b) { return arg_cmp(a, b); };
    for (const Dir& a : dirs)
        for (const Dir& b : dirs) {
            const Ordering ab = ord(a, b), ba = ord(b, a);
            if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
            if (ab == Ordering::Equal) {
                CHECK(ba == Ordering::Equal);
                CHECK(cross(a, b).sign() == 0);
            }
        }
    // Transitivity over a reduced set (cubic loop).
    std::vector<Dir> small;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            if (x != 0 || y != 0) small.emplace_back(Rat(x), Rat(y));
    for (const Dir& a : small)
        for (const Dir& b : small)
            for (const Dir& c : small)
                if (ord(a, b) == Ordering::Less && ord(b, c) == Ordering::Less)
                    CHECK(ord(a, c) == Ordering::Less);
}

TEST_CASE("polygon validation") {
    CHECK_NOTHROW(builtin_polygon("square"));
    CHECK_NOTHROW(builtin_polygon("hexagon"));
    CHECK_NOTHROW(builtin_polygon("octagon"));
    CHECK_THROWS_AS(builtin_polygon("disc"), ParseError);
    // Counterclockwise rejected, not reversed.
    CHECK_THROWS_AS(Polygon::from_vertices({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}), ParseError);
    // Not centrally symmetric.
    CHECK_THROWS_AS(Polygon::from_vertices({pt(0, 3), pt(1, 1), pt(1, 0), pt(0, 0)}), ParseError);
    // Collinear vertices.
    CHECK_THROWS_AS(
        Polygon::from_vertices({pt(0, 2), pt(1, 2), pt(2, 2), pt(2, 0), pt(1, 0), pt(0, 0)}),
        ParseError);
    // Odd count.
    CHECK_THROWS_AS(Polygon::from_vertices({pt(0, 1), pt(1, 1), pt(1, 0)}), ParseError);
}

TEST_CASE("wedge_of_vertex on the unit square") {
    const Polygon s = builtin_polygon("square");
    const WedgeTemplate w2 = wedge_of_vertex(s, 2, Closedness::Closed);
    CHECK(w2.dir_prev == Dir(Rat(-1), Rat(0)));
    CHECK(w2.dir_next == Dir(Rat(0), Rat(-1)));
    const WedgeTemplate w4 = wedge_of_vertex(s, 4, Closedness::Closed);
    CHECK(w4.dir_prev == Dir(Rat(1), Rat(0)));
    CHECK(w4.dir_next == Dir(Rat(0), Rat(1)));
    // Modular indexing.
    const WedgeTemplate w6 = wedge_of_vertex(s, 2 + 4, Closedness::Open);
    CHECK(w6.dir_prev == w2.dir_prev);
    CHECK(w6.dir_next == w2.dir_next);
    CHECK_THROWS_AS(wedge_of_vertex(s, 0, Closedness::Closed), ParseError);
    CHECK_THROWS_AS(wedge_of_vertex(s, -3, Closedness::Closed), ParseError);
}

TEST_CASE("opposite wedges have negated direction pairs") {
    for (const char* name : {"square", "hexagon", "octagon"}) {
        const Polygon s = builtin_polygon(name);
        const int n = s.half_n();
        for (int i = 1; i <= n; ++i) {
            const WedgeTemplate a = wedge_of_vertex(s, i, Closedness::Closed);
            const WedgeTemplate b = wedge_of_vertex(s, i + n, Closedness::Closed);
            CHECK(a.dir_prev == -b.dir_prev);
            CHECK(a.dir_next == -b.dir_next);
        }
    }
}

TEST_CASE("wedge_contains closed vs open") {
    const Polygon s = builtin_polygon("square");
    const WedgePlacement closed{wedge_of_vertex(s, 2, Closedness::Closed), pt(0, 0)};
    const WedgePlacement open{wedge_of_vertex(s, 2, Closedness::Open), pt(0, 0)};
    CHECK(wedge_contains(closed, pt(0, 0)));
    CHECK_FALSE(wedge_contains(open, pt(0, 0)));
    CHECK(wedge_contains(closed, pt(-1, 0)));
    CHECK_FALSE(wedge_contains(open, pt(-1, 0)));
    CHECK(wedge_contains(closed, pt(-1, -1)));
    CHECK(wedge_contains(open, pt(-1, -1)));
    CHECK_FALSE(wedge_contains(closed, pt(1, -1)));

    // Closed contains Open; the difference is exactly the apex plus the two
    // boundary rays.
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
            const Point p = pt(x, y);
            const bool in_closed = wedge_contains(closed, p);
            const bool in_open = wedge_contains(open, p);
            if (in_open) CHECK(in_closed);
            if (in_closed && !in_open) {
                const bool on_prev_ray = x <= 0 && y == 0;
                const bool on_next_ray = x == 0 && y <= 0;
                CHECK((on_prev_ray || on_next_ray));
            }
        }
}

TEST_CASE("polygon_contains") {
    const Polygon s = builtin_polygon("square");
    const Point c = s.centroid();
    CHECK(polygon_contains(s, c, c, Closedness::Closed));
    CHECK(polygon_contains(s, c, c, Closedness::Open));
    // A vertex of the translate: closed yes, open no.
    CHECK(polygon_contains(s, c, pt(0, 0), Closedness::Closed));
    CHECK_FALSE(polygon_contains(s, c, pt(0, 0), Closedness::Open));
    CHECK_FALSE(polygon_contains(s, c, pt(5, 5), Closedness::Closed));
    // Translate centered elsewhere.
    CHECK(polygon_contains(s, pt(3, 3), pt(3, 3), Closedness::Open));
    CHECK(polygon_contains(s, pt(3, 3), ptr("5/2", "5/2"), Closedness::Closed));
    CHECK_FALSE(polygon_contains(s, pt(3, 3), ptr("5/2", "5/2"), Closedness::Open));
}

TEST_CASE("grid_cell_size certificate and values") {
    const Polygon square = builtin_polygon("square");
    CHECK(grid_cell_size(square) == Rat(1, 2));
    CHECK(min_nonadjacent_side_sq_dist(square) == Rat(1));

    for (const char* name : {"square", "hexagon", "octagon"}) {
        const Polygon s = builtin_polygon(name);
        const Rat x = grid_cell_size(s);
        const Rat d2 = min_nonadjacent_side_sq_dist(s);
        CHECK(Rat(2) * x * x < d2);
        // Largest power of two: doubling breaks the certificate.
        const Rat xx = x * Rat(2);
        CHECK_FALSE(Rat(2) * xx * xx < d2);
    }
}

TEST_CASE("grid_cell_size scales with the polygon") {
    const Polygon square = builtin_polygon("square");
    std::vector<Point> doubled;
    for (const Point& v : square.vertices()) doubled.push_back(Point{v.x * Rat(2), v.y * Rat(2)});
    const Polygon big = Polygon::from_vertices(doubled);
    CHECK(grid_cell_size(big) == grid_cell_size(square) * Rat(2));
}

TEST_CASE("squares_per_translate formula") {
    const Polygon square = builtin_polygon("square");
    CHECK(squares_per_translate(square, Rat(1, 2)) == 9);
    CHECK(squares_per_translate(square, Rat(1)) == 4);
    CHECK(squares_per_translate(square, Rat(5)) == 4);
    const GridParams g = grid_params(square);
    CHECK(g.cell_side == Rat(1, 2));
    CHECK(g.squares_per_translate == 9);
    CHECK(g.fold_constant == 81);
    CHECK(grid_params(builtin_polygon("hexagon")).fold_constant == 9 * 25);
}

TEST_CASE("squares_per_translate bounds the exact cell count") {
    // For offsets on a x/8 sub-lattice, count the grid cells of side x that
    // the translate actually intersects; the bound must hold.
    for (const char* name : {"square", "hexagon", "octagon"}) {
        const Polygon s = builtin_polygon(name);
        const Rat x = grid_cell_size(s);
        const long long kp = squares_per_translate(s, x);
        Rat xmin, xmax, ymin, ymax;
        s.bounding_box(xmin, xmax, ymin, ymax);
        for (int ox = 0; ox < 8; ++ox) {
            for (int oy = 0; oy < 8; ++oy) {
                const Point center{s.centroid().x + Rat(ox, 8) * x,
                                   s.centroid().y + Rat(oy, 8) * x};
                const Rat cx = center.x - s.centroid().x;
                const Rat cy = center.y - s.centroid().y;
                const long long jx0 = ((xmin + cx) / x).floor().get_si() - 1;
                const long long jx1 = ((xmax + cx) / x).ceil().get_si() + 1;
                const long long jy0 = ((ymin + cy) / x).floor().get_si() - 1;
                const long long jy1 = ((ymax + cy) / x).ceil().get_si() + 1;
                long long count = 0;
                for (long long j = jx0; j <= jx1; ++j)
                    for (long long l = jy0; l <= jy1; ++l) {
                        const Rect cell =
                            Rect::make(x * Rat(j), x * Rat(j + 1), x * Rat(l), x * Rat(l + 1));
                        if (polygon_halfopen_cell_intersects(s, center, cell)) ++count;
                    }
                CHECK(count <= kp);
            }
        }
    }
}

TEST_CASE("polygon_box_intersects and contains_box") {
    const Polygon s = builtin_polygon("square");
    const Point c = s.centroid();
    CHECK(polygon_box_intersects(s, c, Rect::make(Rat(0), Rat(1), Rat(0), Rat(1))));
    CHECK(polygon_box_intersects(s, c, Rect::make(Rat(1), Rat(2), Rat(1), Rat(2))));  // corner touch
    CHECK_FALSE(polygon_box_intersects(s, c, Rect::make(Rat(2), Rat(3), Rat(0), Rat(1))));
    CHECK(polygon_contains_box(s, c, Rect::make(Rat(0), Rat(1), Rat(0), Rat(1))));
    CHECK_FALSE(polygon_contains_box(s, c, Rect::make(Rat(0), Rat(2), Rat(0), Rat(1))));
    const Polygon hex = builtin_polygon("hexagon");
    CHECK(polygon_box_intersects(hex, pt(0, 0), Rect::make(Rat(2), Rat(3), Rat(1), Rat(2))));  // vertex touch
    CHECK_FALSE(polygon_box_intersects(hex, pt(0, 0), Rect::make(Rat(2), Rat(3), Rat(3, 2), Rat(2))));
    CHECK_FALSE(polygon_box_intersects(hex, pt(0, 0), Rect::make(Rat(3), Rat(4), Rat(0), Rat(1))));
}
