#include "coverdecomp/decomposer.hpp"

#include <algorithm>
#include <random>

#include "coverdecomp/coloring.hpp"
#include "coverdecomp/errors.hpp"
#include "coverdecomp/oracle.hpp"

namespace covdec {

namespace {

long long to_ll(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw SizeBound(std::string(what) + " out of range");
    return z.get_si();
}

}  // namespace

std::map<CellKey, PointSet> dualize(const CoverInstance& instance) {
    const Rat x = grid_cell_size(instance.polygon);
    std::map<CellKey, PointSet> cells;
    for (const Point& c : instance.centers) {
        CellKey key;
        key.jx = to_ll((c.x / x).floor(), "grid cell index");
        key.jy = to_ll((c.y / x).floor(), "grid cell index");
        cells[key].push_back(c);
    }
    return cells;
}

Decomposition decompose(const CoverInstance& instance) {
    const GridParams grid = grid_params(instance.polygon);
    if (instance.fold_target < grid.fold_constant)
        throw InsufficientFold("fold_target " + std::to_string(instance.fold_target) +
                               " is below k = 9*k' = " + std::to_string(grid.fold_constant));
    Point witness;
    if (!coverage_at_least(instance.polygon, instance.centers, instance.region,
                           Closedness::Closed, instance.fold_target, &witness))
        throw InsufficientFold("covering depth below fold_target " +
                               std::to_string(instance.fold_target) + " at " + witness.str());

    // The dual point set must be distinct; duplicate centers beyond the first
    // are split round-robin between the colors afterwards (they only add
    // coverage).
    std::vector<Point> sorted = instance.centers;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Point> unique_centers, duplicates;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k > 0 && sorted[k] == sorted[k - 1]) duplicates.push_back(sorted[k]);
        else unique_centers.push_back(sorted[k]);
    }

    CoverInstance dedup = instance;
    dedup.centers = unique_centers;
    const std::map<CellKey, PointSet> cells = dualize(dedup);

    Decomposition out;
    out.grid = grid;
    for (const auto& [key, pts] : cells) {
        const ColoringResult colored = red_blue_coloring(pts, instance.polygon);
        for (const Point& p : pts) {
            if (colored.rb.at(p) == RBColor::Red) out.red_centers.push_back(p);
            else out.blue_centers.push_back(p);
        }
    }
    bool next_red = true;
    for (const Point& p : duplicates) {
        (next_red ? out.red_centers : out.blue_centers).push_back(p);
        next_red = !next_red;
    }

    Point bad;
    if (!coverage_at_least(instance.polygon, out.red_centers, instance.region,
                           Closedness::Closed, 1, &bad))
        throw DecompositionFailure("red family does not cover the region at " + bad.str());
    if (!coverage_at_least(instance.polygon, out.blue_centers, instance.region,
                           Closedness::Closed, 1, &bad))
        throw DecompositionFailure("blue family does not cover the region at " + bad.str());
    return out;
}

namespace {

// Half-extent of the largest axis-aligned square centered at the centroid
// that fits inside the polygon.
Rat inscribed_square_half_extent(const Polygon& s) {
    const int m = s.side_count();
    bool have = false;
    Rat best(0);
    for (int e = 0; e < m; ++e) {
        const Point& a = s.vertices()[static_cast<std::size_t>(e)];
        const Point& b = s.vertices()[static_cast<std::size_t>((e + 1) % m)];
        const Rat ex = b.x - a.x, ey = b.y - a.y;
        const Rat ux = a.x - s.centroid().x, uy = a.y - s.centroid().y;
        const Rat margin = ex * uy - ey * ux;  // > 0: centroid strictly inside
        const Rat denom = Rat::abs(ex) + Rat::abs(ey);
        const Rat r = margin / denom;
        if (!have || r < best) { best = r; have = true; }
    }
    return best;
}

Rat uniform_rat(std::mt19937_64& rng, int max_den) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, den);
    return Rat(num_dist(rng), den);
}

}  // namespace

CoverInstance generate_covering(const Polygon& s, const Rect& region, long long k,
                                std::uint64_t seed) {
    if (k < 1) throw ParseError("fold must be at least 1");
    CoverInstance inst;
    inst.polygon = s;
    inst.region = region;
    inst.fold_target = k;

    const Rat r = inscribed_square_half_extent(s);
    long long root = 1;
    while (root * root < k) ++root;
    const Rat pitch = (r + r) / Rat(root + 1);

    // Lattice spanning the region inflated by the inscribed half-extent: any
    // point of the region sees at least (root+1)^2 >= k lattice centers whose
    // translates contain it.
    const long long ix0 = to_ll(((region.x_min - r) / pitch).floor(), "lattice index");
    const long long ix1 = to_ll(((region.x_max + r) / pitch).ceil(), "lattice index");
    const long long iy0 = to_ll(((region.y_min - r) / pitch).floor(), "lattice index");
    const long long iy1 = to_ll(((region.y_max + r) / pitch).ceil(), "lattice index");
    std::set<Point> centers;
    for (long long i = ix0; i <= ix1; ++i)
        for (long long j = iy0; j <= iy1; ++j)
            centers.insert(Point{pitch * Rat(i), pitch * Rat(j)});

    std::mt19937_64 rng(seed);
    const Rat spanx = region.width() + r + r;
    const Rat spany = region.height() + r + r;
    for (int extra = 0; extra < 12; ++extra) {
        const Point p{region.x_min - r + uniform_rat(rng, 64) * spanx,
                      region.y_min - r + uniform_rat(rng, 64) * spany};
        centers.insert(p);
    }
    inst.centers.assign(centers.begin(), centers.end());

    Point witness;
    if (!coverage_at_least(s, inst.centers, region, Closedness::Closed, k, &witness))
        throw StructuralViolation("generated covering misses fold " + std::to_string(k) +
                                  " at " + witness.str());
    return inst;
}

PointSet gen_points(int n, std::uint64_t seed) {
    if (n < 0) throw ParseError("negative point count");
    std::mt19937_64 rng(seed);
    std::set<Point> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < n) {
        pts.insert(Point{uniform_rat(rng, 64), uniform_rat(rng, 64)});
        if (++guard > 1000 * (n + 1))
            throw SizeBound("cannot generate enough distinct points");
    }
    return PointSet(pts.begin(), pts.end());
}

}  // namespace covdec
