#include "coverdecomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "coverdecomp/boundary.hpp"
#include "coverdecomp/errors.hpp"

namespace covdec {

namespace {

// Oracle-side wedge scaffolding, derived independently of boundary.cpp.
// q lies in the closed wedge at p iff u(q) >= u(p) and v(q) >= v(p);
// strictly for the open wedge.
struct OracleFrame {
    Dir d1, d2;          // dir_prev, dir_next
    Rat abs_d;           // |cross(d1, d2)|
    int sign_d = 1;
    std::vector<Rat> u, v;            // scaled linear keys per point
    std::vector<int> ru, rv;          // dense ranks
    std::vector<Rat> uvals, vvals;    // distinct values ascending
};

Rat oracle_cross(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    return ax * by - ay * bx;
}

void oracle_rank(const std::vector<Rat>& keys, std::vector<int>& ranks, std::vector<Rat>& vals) {
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    ranks.assign(keys.size(), 0);
    vals.clear();
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int id = order[k];
        if (vals.empty() || keys[static_cast<std::size_t>(id)] != vals.back())
            vals.push_back(keys[static_cast<std::size_t>(id)]);
        ranks[static_cast<std::size_t>(id)] = static_cast<int>(vals.size()) - 1;
    }
}

OracleFrame oracle_frame(const PointSet& h, const Polygon& s, int i) {
    const Point& vi = s.vertex(i);
    const Point& vp = s.vertex(i - 1);
    const Point& vn = s.vertex(i + 1);
    OracleFrame f;
    f.d1 = Dir(vp.x - vi.x, vp.y - vi.y);
    f.d2 = Dir(vn.x - vi.x, vn.y - vi.y);
    const Rat d = oracle_cross(f.d1.dx, f.d1.dy, f.d2.dx, f.d2.dy);
    f.sign_d = d.sign();
    f.abs_d = Rat::abs(d);
    f.u.reserve(h.size());
    f.v.reserve(h.size());
    for (const Point& q : h) {
        Rat u = oracle_cross(q.x, q.y, f.d2.dx, f.d2.dy);
        Rat v = oracle_cross(f.d1.dx, f.d1.dy, q.x, q.y);
        if (f.sign_d < 0) { u = -u; v = -v; }
        f.u.push_back(std::move(u));
        f.v.push_back(std::move(v));
    }
    oracle_rank(f.u, f.ru, f.uvals);
    oracle_rank(f.v, f.rv, f.vvals);
    return f;
}

// Apex whose scaled keys are exactly (su, sv).
Point apex_for(const OracleFrame& f, const Rat& su, const Rat& sv) {
    const Rat s = su / f.abs_d;
    const Rat t = sv / f.abs_d;
    return Point{s * f.d1.dx + t * f.d2.dx, s * f.d1.dy + t * f.d2.dy};
}

Rat threshold_value(const std::vector<Rat>& vals, int cut, Closedness c) {
    const Rat one(1);
    if (cut >= static_cast<int>(vals.size())) return vals.back() + one;  // empty side
    if (c == Closedness::Closed) return vals[static_cast<std::size_t>(cut)];
    if (cut == 0) return vals.front() - one;
    const Rat half(1, 2);
    return (vals[static_cast<std::size_t>(cut - 1)] + vals[static_cast<std::size_t>(cut)]) * half;
}

}  // namespace

std::vector<PlacementSample> enumerate_wedge_placements(const PointSet& h, const Polygon& s,
                                                        int i, Closedness c, std::size_t bound) {
    if (h.size() > bound)
        throw SizeBound("enumerate_wedge_placements: point set of size " +
                        std::to_string(h.size()) + " exceeds bound " + std::to_string(bound));
    std::vector<PlacementSample> out;
    if (h.empty()) return out;
    const OracleFrame f = oracle_frame(h, s, i);
    const int nu = static_cast<int>(f.uvals.size());
    const int nv = static_cast<int>(f.vvals.size());

    // Points grouped by u-rank; per u-cut a the trace of (a, b) is the set
    // {ru >= a and rv >= b}. The cut pair is canonical (hence the trace is
    // new) iff group a reaches rv >= b and value-group b reaches ru >= a.
    std::vector<std::vector<int>> by_u(static_cast<std::size_t>(nu));
    for (int id = 0; id < static_cast<int>(h.size()); ++id)
        by_u[static_cast<std::size_t>(f.ru[static_cast<std::size_t>(id)])].push_back(id);
    std::vector<int> max_rv_in_u(static_cast<std::size_t>(nu), -1);
    for (int a = 0; a < nu; ++a)
        for (int id : by_u[static_cast<std::size_t>(a)])
            max_rv_in_u[static_cast<std::size_t>(a)] =
                std::max(max_rv_in_u[static_cast<std::size_t>(a)], f.rv[static_cast<std::size_t>(id)]);
    std::vector<int> max_ru_in_v(static_cast<std::size_t>(nv), -1);
    for (int id = 0; id < static_cast<int>(h.size()); ++id) {
        const int b = f.rv[static_cast<std::size_t>(id)];
        max_ru_in_v[static_cast<std::size_t>(b)] =
            std::max(max_ru_in_v[static_cast<std::size_t>(b)], f.ru[static_cast<std::size_t>(id)]);
    }

    std::vector<int> active;  // ids with ru >= a, maintained sorted by rv descending
    for (int a = nu - 1; a >= 0; --a) {
        std::vector<int> grp = by_u[static_cast<std::size_t>(a)];
        std::sort(grp.begin(), grp.end(), [&](int x, int y) {
            return f.rv[static_cast<std::size_t>(x)] > f.rv[static_cast<std::size_t>(y)];
        });
        std::vector<int> merged(active.size() + grp.size());
        std::merge(active.begin(), active.end(), grp.begin(), grp.end(), merged.begin(),
                   [&](int x, int y) {
                       return f.rv[static_cast<std::size_t>(x)] > f.rv[static_cast<std::size_t>(y)];
                   });
        active = std::move(merged);
        for (std::size_t k = 0; k < active.size();) {
            const int b = f.rv[static_cast<std::size_t>(active[k])];
            std::size_t g = k;
            while (g < active.size() && f.rv[static_cast<std::size_t>(active[g])] == b) ++g;
            // canonical pair check
            if (max_rv_in_u[static_cast<std::size_t>(a)] >= b &&
                max_ru_in_v[static_cast<std::size_t>(b)] >= a) {
                PlacementSample ps;
                ps.wedge_index = i;
                ps.closedness = c;
                ps.apex = apex_for(f, threshold_value(f.uvals, a, c),
                                   threshold_value(f.vvals, b, c));
                ps.trace.reserve(g);
                for (std::size_t j = 0; j < g; ++j)
                    ps.trace.push_back(h[static_cast<std::size_t>(active[j])]);
                std::sort(ps.trace.begin(), ps.trace.end());
                out.push_back(std::move(ps));
            }
            k = g;
        }
    }
    // The empty trace, realized beyond the extremes.
    PlacementSample empty;
    empty.wedge_index = i;
    empty.closedness = c;
    empty.apex = apex_for(f, f.uvals.back() + Rat(1), f.vvals.back() + Rat(1));
    out.push_back(std::move(empty));
    return out;
}

std::vector<PlacementSample> verify_coloring(const PointSet& h, const Polygon& s,
                                             const std::map<Point, RBColor>& rb, int m) {
    std::vector<PlacementSample> violations;
    if (h.empty()) return violations;
    std::vector<RBColor> color(h.size());
    for (std::size_t id = 0; id < h.size(); ++id) {
        const auto it = rb.find(h[id]);
        if (it == rb.end()) throw ParseError("coloring is not total: missing " + h[id].str());
        color[id] = it->second;
    }
    if (m < 1) throw ParseError("m must be positive");

    for (int i = 1; i <= s.side_count(); ++i) {
        const OracleFrame f = oracle_frame(h, s, i);
        const int nu = static_cast<int>(f.uvals.size());
        std::vector<std::vector<int>> by_u(static_cast<std::size_t>(nu));
        for (int id = 0; id < static_cast<int>(h.size()); ++id)
            by_u[static_cast<std::size_t>(f.ru[static_cast<std::size_t>(id)])].push_back(id);
        std::vector<int> max_rv_in_u(static_cast<std::size_t>(nu), -1);
        for (int a = 0; a < nu; ++a)
            for (int id : by_u[static_cast<std::size_t>(a)])
                max_rv_in_u[static_cast<std::size_t>(a)] = std::max(
                    max_rv_in_u[static_cast<std::size_t>(a)], f.rv[static_cast<std::size_t>(id)]);

        std::vector<int> active;
        for (int a = nu - 1; a >= 0; --a) {
            std::vector<int> grp = by_u[static_cast<std::size_t>(a)];
            std::sort(grp.begin(), grp.end(), [&](int x, int y) {
                return f.rv[static_cast<std::size_t>(x)] > f.rv[static_cast<std::size_t>(y)];
            });
            std::vector<int> merged(active.size() + grp.size());
            std::merge(active.begin(), active.end(), grp.begin(), grp.end(), merged.begin(),
                       [&](int x, int y) {
                           return f.rv[static_cast<std::size_t>(x)] > f.rv[static_cast<std::size_t>(y)];
                       });
            active = std::move(merged);
            // Monochromatic tie-aligned prefixes in descending rv order are
            // exactly the single-color traces at this u-cut.
            std::optional<RBColor> mono;
            std::size_t k = 0;
            while (k < active.size()) {
                const int b = f.rv[static_cast<std::size_t>(active[k])];
                std::size_t g = k;
                bool mixed = false;
                while (g < active.size() && f.rv[static_cast<std::size_t>(active[g])] == b) {
                    const RBColor cc = color[static_cast<std::size_t>(active[g])];
                    if (!mono) mono = cc;
                    else if (*mono != cc) mixed = true;
                    ++g;
                }
                if (mixed) break;
                if (static_cast<int>(g) >= m && max_rv_in_u[static_cast<std::size_t>(a)] >= b) {
                    PlacementSample ps;
                    ps.wedge_index = i;
                    ps.closedness = Closedness::Closed;
                    ps.apex = apex_for(f, threshold_value(f.uvals, a, Closedness::Closed),
                                       threshold_value(f.vvals, b, Closedness::Closed));
                    for (std::size_t j = 0; j < g; ++j)
                        ps.trace.push_back(h[static_cast<std::size_t>(active[j])]);
                    std::sort(ps.trace.begin(), ps.trace.end());
                    violations.push_back(std::move(ps));
                }
                k = g;
            }
        }
    }
    return violations;
}

namespace {

struct DepthSearch {
    const Polygon& s;
    const std::vector<Point>& centers;
    Closedness c;
    long long best = 0;
    Point witness;
    std::optional<long long> threshold;  // stop early once a point below it is found
    bool failed = false;

    long long depth_at(const Point& q) const {
        long long d = 0;
        for (const Point& ctr : centers)
            if (polygon_contains(s, ctr, q, c)) ++d;
        return d;
    }

    void consider(const Point& q, long long depth) {
        if (depth < best) { best = depth; witness = q; }
        if (threshold && best < *threshold) failed = true;
    }

    // Exact minimum of contained_acc + #(cands containing q) over the box:
    // samples every face of the local arrangement of crossing edge lines.
    void leaf(const Rect& box, const std::vector<int>& cands, long long acc) {
        std::vector<std::pair<Point, Point>> segs;  // supporting edge lines as point pairs
        std::set<std::pair<std::string, std::string>> seen;
        const int msides = s.side_count();
        for (int id : cands) {
            const Point off{centers[static_cast<std::size_t>(id)].x - s.centroid().x,
                            centers[static_cast<std::size_t>(id)].y - s.centroid().y};
            for (int e = 0; e < msides; ++e) {
                const Point a0 = s.vertices()[static_cast<std::size_t>(e)];
                const Point a1 = s.vertices()[static_cast<std::size_t>((e + 1) % msides)];
                const Point p0{a0.x + off.x, a0.y + off.y};
                const Point p1{a1.x + off.x, a1.y + off.y};
                // Dedup parallel translated edges by (edge index, offset along normal).
                const Rat offset = (a1.x - a0.x) * p0.y - (a1.y - a0.y) * p0.x;
                if (seen.emplace(std::to_string(e), offset.str()).second)
                    segs.emplace_back(p0, p1);
            }
        }
        std::vector<Rat> xs{box.x_min, box.x_max};
        for (std::size_t a = 0; a < segs.size(); ++a) {
            const Rat adx = segs[a].second.x - segs[a].first.x;
            const Rat ady = segs[a].second.y - segs[a].first.y;
            for (std::size_t bq = a + 1; bq < segs.size(); ++bq) {
                const Rat bdx = segs[bq].second.x - segs[bq].first.x;
                const Rat bdy = segs[bq].second.y - segs[bq].first.y;
                const Rat den = adx * bdy - ady * bdx;
                if (den.sign() == 0) continue;
                const Rat wx = segs[bq].first.x - segs[a].first.x;
                const Rat wy = segs[bq].first.y - segs[a].first.y;
                const Rat t = (wx * bdy - wy * bdx) / den;
                const Rat ix = segs[a].first.x + t * adx;
                if (box.x_min <= ix && ix <= box.x_max) xs.push_back(ix);
            }
            if (adx.sign() == 0 && box.x_min <= segs[a].first.x && segs[a].first.x <= box.x_max)
                xs.push_back(segs[a].first.x);  // vertical line
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::vector<Rat> samples_x;
        const Rat half(1, 2);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            samples_x.push_back(xs[k]);
            if (k + 1 < xs.size()) samples_x.push_back((xs[k] + xs[k + 1]) * half);
        }
        for (const Rat& x : samples_x) {
            std::vector<Rat> ys{box.y_min, box.y_max};
            for (const auto& seg : segs) {
                const Rat dx = seg.second.x - seg.first.x;
                const Rat dy = seg.second.y - seg.first.y;
                if (dx.sign() == 0) continue;
                const Rat y = seg.first.y + dy * (x - seg.first.x) / dx;
                if (box.y_min <= y && y <= box.y_max) ys.push_back(y);
            }
            std::sort(ys.begin(), ys.end());
            ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
            std::vector<Rat> samples_y;
            for (std::size_t k = 0; k < ys.size(); ++k) {
                samples_y.push_back(ys[k]);
                if (k + 1 < ys.size()) samples_y.push_back((ys[k] + ys[k + 1]) * half);
            }
            for (const Rat& y : samples_y) {
                if (failed) return;
                const Point q{x, y};
                long long d = acc;
                for (int id : cands)
                    if (polygon_contains(s, centers[static_cast<std::size_t>(id)], q, c)) ++d;
                consider(q, d);
            }
        }
    }

    void recurse(const Rect& box, const std::vector<int>& cands, long long acc, int depth) {
        if (failed) return;
        long long prune = best;  // min over the box is at least acc
        if (threshold && *threshold < prune) prune = *threshold;
        if (acc >= prune) return;
        // Leaf once few distinct supporting lines cross the box (translated
        // copies of one polygon edge often share lines).
        bool take_leaf = depth >= 48 || (box.x_min == box.x_max && box.y_min == box.y_max);
        if (!take_leaf && cands.size() <= 96) {
            std::set<std::pair<int, std::string>> lines;
            const int msides = s.side_count();
            for (int id : cands) {
                const Point off{centers[static_cast<std::size_t>(id)].x - s.centroid().x,
                                centers[static_cast<std::size_t>(id)].y - s.centroid().y};
                for (int e = 0; e < msides; ++e) {
                    const Point& a0 = s.vertices()[static_cast<std::size_t>(e)];
                    const Point& a1 = s.vertices()[static_cast<std::size_t>((e + 1) % msides)];
                    const Rat offset =
                        (a1.x - a0.x) * (a0.y + off.y) - (a1.y - a0.y) * (a0.x + off.x);
                    lines.emplace(e, offset.str());
                }
            }
            take_leaf = lines.size() <= 14;
        }
        if (take_leaf) {
            leaf(box, cands, acc);
            return;
        }
        const Rat half(1, 2);
        const Rat xm = (box.x_min + box.x_max) * half;
        const Rat ym = (box.y_min + box.y_max) * half;
        const Rect children[4] = {
            Rect{box.x_min, xm, box.y_min, ym},
            Rect{box.x_min, xm, ym, box.y_max},
            Rect{xm, box.x_max, box.y_min, ym},
            Rect{xm, box.x_max, ym, box.y_max},
        };
        for (const Rect& child : children) {
            long long child_acc = acc;
            std::vector<int> child_cands;
            for (int id : cands) {
                const Point& ctr = centers[static_cast<std::size_t>(id)];
                if (polygon_contains_box(s, ctr, child)) ++child_acc;
                else if (polygon_box_intersects(s, ctr, child)) child_cands.push_back(id);
            }
            // Seed the incumbent with the child's center before descending.
            if (!failed && child_acc < best) {
                const Point probe = child.center();
                long long d = child_acc;
                for (int id : child_cands)
                    if (polygon_contains(s, centers[static_cast<std::size_t>(id)], probe, c)) ++d;
                consider(probe, d);
            }
            recurse(child, child_cands, child_acc, depth + 1);
            if (failed) return;
        }
    }

    void run(const Rect& r) {
        witness = r.center();
        best = depth_at(witness);
        if (threshold && best < *threshold) { failed = true; return; }
        std::vector<int> cands;
        long long acc = 0;
        for (int id = 0; id < static_cast<int>(centers.size()); ++id) {
            if (polygon_contains_box(s, centers[static_cast<std::size_t>(id)], r)) ++acc;
            else if (polygon_box_intersects(s, centers[static_cast<std::size_t>(id)], r))
                cands.push_back(id);
        }
        recurse(r, cands, acc, 0);
    }
};

}  // namespace

DepthReport coverage_depth(const Polygon& s, const std::vector<Point>& centers, const Rect& r,
                           Closedness c) {
    DepthSearch search{s, centers, c};
    if (centers.empty()) return DepthReport{0, r.center()};
    search.run(r);
    // The witness must reproduce the reported minimum.
    if (search.depth_at(search.witness) != search.best)
        throw StructuralViolation("coverage_depth witness does not reproduce min depth");
    return DepthReport{search.best, search.witness};
}

bool coverage_at_least(const Polygon& s, const std::vector<Point>& centers, const Rect& r,
                       Closedness c, long long fold, Point* witness) {
    if (fold <= 0) return true;
    DepthSearch search{s, centers, c};
    search.threshold = fold;
    if (centers.empty()) {
        if (witness) *witness = r.center();
        return false;
    }
    search.run(r);
    if (search.failed && witness) *witness = search.witness;
    return !search.failed;
}

namespace {

bool all_on_one_side(const PointSet& h, const Point& p, const Dir& direction) {
    bool pos = false, neg = false;
    for (const Point& q : h) {
        const int sgn = cross(direction, sub(q, p)).sign();
        if (sgn > 0) pos = true;
        if (sgn < 0) neg = true;
    }
    return !(pos && neg);
}

// Number of maximal cyclic runs covered by a sorted set of distinct
// positions on a cycle of the given length.
int cyclic_run_count(const std::vector<int>& positions, int len) {
    if (positions.empty()) return 0;
    if (static_cast<int>(positions.size()) == len) return 1;
    int runs = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const int prev = positions[(k + positions.size() - 1) % positions.size()];
        if ((positions[k] - prev + len) % len != 1) ++runs;
    }
    return runs;
}

}  // namespace

bool ClaimReport::all_pass() const {
    for (const ClaimRow& r : rows)
        if (!r.pass) return false;
    return true;
}

const ClaimRow& ClaimReport::row(const std::string& claim) const {
    for (const ClaimRow& r : rows)
        if (r.claim == claim) return r;
    throw ParseError("no claim row named " + claim);
}

ClaimReport check_claims(const PointSet& h, const Polygon& s, Closedness c) {
    ClaimReport report;
    const auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        report.rows.push_back(ClaimRow{name, pass, detail});
    };
    if (h.empty()) {
        for (const char* name :
             {"boundary_definition", "prec_total", "pi_injective", "halfplane_shared",
              "closed_shared_unique", "singular_opposite_pair", "singular_same_pair",
              "singular_prec_reversal", "two_interval", "order_projection_crosscheck"})
            add(name, true, "vacuous: empty set");
        return report;
    }

    const BoundaryStructure b = assemble_cyclic(h, s, c);
    const int m = s.side_count();
    const int n = s.half_n();

    // Definition soundness: the per-wedge boundary lists match the direct
    // definition test, done here with the oracle's own keys.
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i <= m && pass; ++i) {
            const OracleFrame f = oracle_frame(h, s, i);
            std::set<int> expected;
            for (int p = 0; p < static_cast<int>(h.size()); ++p) {
                bool empty_wedge = true;
                for (int q = 0; q < static_cast<int>(h.size()); ++q) {
                    if (q == p) continue;
                    const bool inside =
                        c == Closedness::Closed
                            ? f.u[static_cast<std::size_t>(q)] >= f.u[static_cast<std::size_t>(p)] &&
                                  f.v[static_cast<std::size_t>(q)] >= f.v[static_cast<std::size_t>(p)]
                            : f.u[static_cast<std::size_t>(q)] > f.u[static_cast<std::size_t>(p)] &&
                                  f.v[static_cast<std::size_t>(q)] > f.v[static_cast<std::size_t>(p)];
                    if (inside) { empty_wedge = false; break; }
                }
                if (empty_wedge) expected.insert(p);
            }
            const std::set<int> got(b.per_wedge[static_cast<std::size_t>(i - 1)].begin(),
                                    b.per_wedge[static_cast<std::size_t>(i - 1)].end());
            if (got != expected) {
                pass = false;
                detail = "wedge " + std::to_string(i);
            }
        }
        add("boundary_definition", pass, detail);
    }

    // prec totality and injectivity of the projection order.
    {
        bool total = true, injective = true;
        std::string detail;
        for (int i = 1; i <= m; ++i) {
            const auto& ids = b.per_wedge[static_cast<std::size_t>(i - 1)];
            for (std::size_t a = 0; a < ids.size(); ++a)
                for (std::size_t bq = a + 1; bq < ids.size(); ++bq) {
                    const Point& p = h[static_cast<std::size_t>(ids[a])];
                    const Point& q = h[static_cast<std::size_t>(ids[bq])];
                    const Prec r = order_prec(s, i, p, q);
                    if (r == Prec::Incomparable) {
                        total = false;
                        injective = false;
                        detail = "wedge " + std::to_string(i) + ": " + p.str() + " vs " + q.str();
                    }
                }
        }
        add("prec_total", total, detail);
        add("pi_injective", injective, detail);
    }

    // Shared boundary points of consecutive wedges: halfplane claim and
    // closed-case uniqueness.
    {
        bool half_ok = true, unique_ok = true;
        std::string half_detail, unique_detail;
        for (int i = 1; i <= m; ++i) {
            const int j = (i % m) + 1;
            std::vector<int> shared;
            for (int id : b.per_wedge[static_cast<std::size_t>(i - 1)])
                if (b.wedge_sets[static_cast<std::size_t>(id)].count(j)) shared.push_back(id);
            if (c == Closedness::Closed && shared.size() > 1) {
                unique_ok = false;
                unique_detail = "wedges " + std::to_string(i) + "," + std::to_string(j);
            }
            const Point& vi = s.vertex(i);
            const Point& vj = s.vertex(i + 1);
            const Dir edge(vj.x - vi.x, vj.y - vi.y);
            for (int id : shared)
                if (!all_on_one_side(h, h[static_cast<std::size_t>(id)], edge)) {
                    half_ok = false;
                    half_detail = h[static_cast<std::size_t>(id)].str();
                }
        }
        add("halfplane_shared", half_ok, half_detail);
        if (c == Closedness::Closed) add("closed_shared_unique", unique_ok, unique_detail);
    }

    // Singular structure, re-derived from the definition sets.
    {
        bool opposite = true, same_pair = true, reversal = true;
        std::string detail;
        std::vector<int> singular_ids;
        std::pair<int, int> pair{0, 0};
        for (int id : b.boundary_ids) {
            const std::set<int>& idx = b.wedge_sets[static_cast<std::size_t>(id)];
            if (static_cast<int>(idx.size()) == m) continue;
            int breaks = 0;
            for (int i : idx)
                if (!idx.count((i % m) + 1)) ++breaks;
            if (breaks <= 1) continue;  // contiguous cyclic arc: regular
            singular_ids.push_back(id);
            if (idx.size() != 2 || *std::next(idx.begin()) - *idx.begin() != n) {
                opposite = false;
                detail = h[static_cast<std::size_t>(id)].str();
                continue;
            }
            const std::pair<int, int> this_pair{*idx.begin(), *std::next(idx.begin())};
            if (pair.first != 0 && this_pair != pair) {
                same_pair = false;
                detail = h[static_cast<std::size_t>(id)].str();
            }
            pair = this_pair;
        }
        if (opposite && pair.first != 0) {
            for (std::size_t a = 0; a < singular_ids.size() && reversal; ++a)
                for (std::size_t bq = a + 1; bq < singular_ids.size() && reversal; ++bq) {
                    const Point& p = h[static_cast<std::size_t>(singular_ids[a])];
                    const Point& q = h[static_cast<std::size_t>(singular_ids[bq])];
                    const Prec r1 = order_prec(s, pair.first, p, q);
                    const Prec r2 = order_prec(s, pair.second, p, q);
                    if (!((r1 == Prec::Less && r2 == Prec::Greater) ||
                          (r1 == Prec::Greater && r2 == Prec::Less))) {
                        reversal = false;
                        detail = p.str() + " vs " + q.str();
                    }
                }
        }
        add("singular_opposite_pair", opposite, detail);
        add("singular_same_pair", same_pair, detail);
        add("singular_prec_reversal", reversal, detail);
    }

    // Two-interval claim over the complete trace family, restricted to the
    // boundary points (thresholds only matter against boundary keys).
    {
        bool pass = true;
        std::string detail;
        PointSet boundary_pts;
        for (int id : b.boundary_ids) boundary_pts.push_back(h[static_cast<std::size_t>(id)]);
        std::map<Point, std::vector<int>> positions;
        for (int k = 0; k < static_cast<int>(b.cyclic.size()); ++k)
            positions[b.points[static_cast<std::size_t>(
                               b.cyclic[static_cast<std::size_t>(k)].point_id)]]
                .push_back(k);
        const int len = static_cast<int>(b.cyclic.size());
        for (int i = 1; i <= m && pass; ++i) {
            const auto samples =
                enumerate_wedge_placements(boundary_pts, s, i, c, boundary_pts.size());
            for (const PlacementSample& ps : samples) {
                std::vector<int> pos;
                for (const Point& p : ps.trace)
                    for (int k : positions.at(p)) pos.push_back(k);
                std::sort(pos.begin(), pos.end());
                if (cyclic_run_count(pos, len) > 2) {
                    pass = false;
                    detail = "wedge " + std::to_string(i) + " apex " + ps.apex.str();
                    break;
                }
            }
        }
        add("two_interval", pass, detail);
    }

    // Floating cross-check of the cone order against projection onto the
    // direction perpendicular to the wedge bisector, where projections are
    // separated by more than 1e-9.
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i <= m && pass; ++i) {
            const Point& vi = s.vertex(i);
            const Point& vp = s.vertex(i - 1);
            const Point& vn = s.vertex(i + 1);
            const double d1x = (vp.x - vi.x).to_double(), d1y = (vp.y - vi.y).to_double();
            const double d2x = (vn.x - vi.x).to_double(), d2y = (vn.y - vi.y).to_double();
            const double l1 = std::hypot(d1x, d1y), l2 = std::hypot(d2x, d2y);
            const double bx = d1x / l1 + d2x / l2, by = d1y / l1 + d2y / l2;
            // Perpendicular with the wedge on its left.
            const double px = by, py = -bx;
            const auto& ids = b.per_wedge[static_cast<std::size_t>(i - 1)];
            for (std::size_t a = 0; a + 1 < ids.size(); ++a) {
                // per_wedge is sorted ascending by prec_i; projections must
                // not decrease beyond the tolerance.
                const Point& p = h[static_cast<std::size_t>(ids[a])];
                const Point& q = h[static_cast<std::size_t>(ids[a + 1])];
                const double kp = p.x.to_double() * px + p.y.to_double() * py;
                const double kq = q.x.to_double() * px + q.y.to_double() * py;
                if (kp > kq + 1e-9) {
                    pass = false;
                    detail = "wedge " + std::to_string(i) + ": " + p.str() + " after " + q.str();
                    break;
                }
            }
        }
        add("order_projection_crosscheck", pass, detail);
    }

    return report;
}

}  // namespace covdec
