#include "coverdecomp/boundary.hpp"

#include <algorithm>
#include <numeric>

#include "coverdecomp/errors.hpp"

namespace covdec {

void require_distinct(const PointSet& h) {
    PointSet sorted = h;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw ParseError("point set has duplicate point " + sorted[i].str());
}

namespace {

void rank_values(const std::vector<Rat>& keys, std::vector<int>& ranks,
                 std::vector<Rat>& values) {
    const std::size_t n = keys.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
    ranks.assign(n, 0);
    values.clear();
    int r = -1;
    for (std::size_t k = 0; k < n; ++k) {
        const int id = order[k];
        if (k == 0 || keys[static_cast<std::size_t>(id)] != values.back()) {
            values.push_back(keys[static_cast<std::size_t>(id)]);
            ++r;
        }
        ranks[static_cast<std::size_t>(id)] = r;
    }
}

}  // namespace

std::vector<WedgeFrame> build_wedge_frames(const PointSet& h, const Polygon& s) {
    const int m = s.side_count();
    std::vector<WedgeFrame> frames;
    frames.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const WedgeTemplate t = wedge_of_vertex(s, i, Closedness::Closed);
        WedgeFrame f;
        f.index = i;
        f.dir_prev = t.dir_prev;
        f.dir_next = t.dir_next;
        f.sign_d = cross(t.dir_prev, t.dir_next).sign();
        f.key_s.reserve(h.size());
        f.key_t.reserve(h.size());
        for (const Point& q : h) {
            // cross(q, dir_next) = -cross(dir_next, q)
            Rat ks = -cross(f.dir_next, q);
            Rat kt = cross(f.dir_prev, q);
            if (f.sign_d < 0) { ks = -ks; kt = -kt; }
            f.key_s.push_back(std::move(ks));
            f.key_t.push_back(std::move(kt));
        }
        rank_values(f.key_s, f.rank_s, f.values_s);
        rank_values(f.key_t, f.rank_t, f.values_t);
        frames.push_back(std::move(f));
    }
    return frames;
}

std::vector<int> boundary_ids_of_subset(const WedgeFrame& frame, const std::vector<int>& subset,
                                        Closedness c) {
    std::vector<int> order = subset;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ra = frame.rank_s[static_cast<std::size_t>(a)];
        const int rb = frame.rank_s[static_cast<std::size_t>(b)];
        if (ra != rb) return ra > rb;
        return frame.rank_t[static_cast<std::size_t>(a)] > frame.rank_t[static_cast<std::size_t>(b)];
    });
    std::vector<int> out;
    int best_t = -1;  // max rank_t over strictly higher s-groups
    std::size_t k = 0;
    while (k < order.size()) {
        std::size_t g = k;
        const int rs = frame.rank_s[static_cast<std::size_t>(order[k])];
        while (g < order.size() && frame.rank_s[static_cast<std::size_t>(order[g])] == rs) ++g;
        // order[k..g) is one s-group, rank_t descending; order[k] attains the
        // group max (unique point per (s, t) pair).
        if (c == Closedness::Closed) {
            const int rt = frame.rank_t[static_cast<std::size_t>(order[k])];
            if (rt > best_t) out.push_back(order[k]);
        } else {
            for (std::size_t j = k; j < g; ++j) {
                const int rt = frame.rank_t[static_cast<std::size_t>(order[j])];
                if (rt >= best_t) out.push_back(order[j]);
                else break;  // rank_t descending within the group
            }
        }
        best_t = std::max(best_t, frame.rank_t[static_cast<std::size_t>(order[k])]);
        k = g;
    }
    return out;
}

namespace {

// Ascending prec_i on boundary ids: key_s ascending, ties by key_t descending.
void sort_by_prec(const WedgeFrame& frame, std::vector<int>& ids) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        const int ra = frame.rank_s[static_cast<std::size_t>(a)];
        const int rb = frame.rank_s[static_cast<std::size_t>(b)];
        if (ra != rb) return ra < rb;
        return frame.rank_t[static_cast<std::size_t>(a)] > frame.rank_t[static_cast<std::size_t>(b)];
    });
}

bool is_cyclic_arc(const std::set<int>& idx, int two_n) {
    if (static_cast<int>(idx.size()) == two_n) return true;
    int breaks = 0;
    for (int i : idx) {
        const int next = (i % two_n) + 1;
        if (!idx.count(next)) ++breaks;
    }
    return breaks == 1;
}

}  // namespace

std::vector<Point> compute_boundary_i(const PointSet& h, const Polygon& s, int i, Closedness c) {
    require_distinct(h);
    const std::vector<WedgeFrame> frames = build_wedge_frames(h, s);
    const WedgeFrame& frame = frames[static_cast<std::size_t>(i - 1)];
    std::vector<int> all(h.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> ids = boundary_ids_of_subset(frame, all, c);
    sort_by_prec(frame, ids);
    std::vector<Point> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(h[static_cast<std::size_t>(id)]);
    return out;
}

std::vector<Point> compute_boundary_i_quadratic(const PointSet& h, const Polygon& s, int i,
                                                Closedness c) {
    require_distinct(h);
    const WedgeTemplate t = wedge_of_vertex(s, i, c);
    std::vector<Point> out;
    for (const Point& p : h) {
        bool empty = true;
        for (const Point& q : h) {
            if (q == p) continue;
            if (wedge_contains(WedgePlacement{t, p}, q)) { empty = false; break; }
        }
        if (empty) out.push_back(p);
    }
    // Insertion sort through the pairwise order; boundary points are always
    // comparable.
    for (std::size_t a = 1; a < out.size(); ++a) {
        Point key = out[a];
        std::size_t b = a;
        while (b > 0) {
            const Prec r = order_prec(s, i, out[b - 1], key);
            if (r == Prec::Incomparable)
                throw StructuralViolation("incomparable boundary points under prec_" +
                                          std::to_string(i));
            if (r == Prec::Less) break;
            out[b] = out[b - 1];
            --b;
        }
        out[b] = key;
    }
    return out;
}

Prec order_prec(const Polygon& s, int i, const Point& p, const Point& q) {
    if (p == q) throw ParseError("order_prec requires distinct points");
    const WedgeTemplate t = wedge_of_vertex(s, i, Closedness::Closed);
    const int sd = cross(t.dir_prev, t.dir_next).sign();
    const auto keys = [&](const Point& z, Rat& ks, Rat& kt) {
        ks = -cross(t.dir_next, z);
        kt = cross(t.dir_prev, z);
        if (sd < 0) { ks = -ks; kt = -kt; }
    };
    Rat sp, tp, sq, tq;
    keys(p, sp, tp);
    keys(q, sq, tq);
    // q - p in cone(dir_prev, -dir_next) <=> key_s(q) >= key_s(p) and
    // key_t(q) <= key_t(p).
    if (sq >= sp && tq <= tp) return Prec::Less;
    if (sp >= sq && tp <= tq) return Prec::Greater;
    return Prec::Incomparable;
}

std::set<Point> detect_singular(const std::map<Point, std::set<int>>& wedge_sets, int n) {
    const int two_n = 2 * n;
    std::set<Point> singular;
    std::pair<int, int> pair{0, 0};
    for (const auto& [p, idx] : wedge_sets) {
        if (idx.empty()) continue;
        if (is_cyclic_arc(idx, two_n)) continue;
        // Claim: a singular point is boundary exactly for an opposite pair.
        if (idx.size() != 2)
            throw StructuralViolation("singular point " + p.str() +
                                      " has wedge set of size " + std::to_string(idx.size()));
        const int a = *idx.begin();
        const int b = *std::next(idx.begin());
        if (b - a != n)
            throw StructuralViolation("singular point " + p.str() +
                                      " pair is not opposite: {" + std::to_string(a) + "," +
                                      std::to_string(b) + "}");
        // Claim: all singular points share one pair.
        if (pair.first != 0 && (pair.first != a || pair.second != b))
            throw StructuralViolation("singular points with different wedge pairs");
        pair = {a, b};
        singular.insert(p);
    }
    return singular;
}

int BoundaryStructure::norm_index(int original) const {
    const int m = polygon.side_count();
    return ((original - 1 - rotation) % m + m) % m + 1;
}

int BoundaryStructure::orig_index(int normalized) const {
    const int m = polygon.side_count();
    return ((normalized - 1 + rotation) % m + m) % m + 1;
}

const BoundaryEntry& BoundaryStructure::entry(const Point& p) const {
    const auto it = entries.find(p);
    if (it == entries.end()) throw ParseError("not a boundary point: " + p.str());
    return it->second;
}

BoundaryStructure assemble_cyclic(const PointSet& h, const Polygon& s, Closedness c) {
    require_distinct(h);
    BoundaryStructure b;
    b.polygon = s;
    b.closedness = c;
    b.points = h;
    b.frames = build_wedge_frames(h, s);
    const int m = s.side_count();
    const int n = s.half_n();

    std::vector<int> all(h.size());
    std::iota(all.begin(), all.end(), 0);
    b.wedge_sets.assign(h.size(), {});
    b.per_wedge.assign(static_cast<std::size_t>(m), {});
    for (int i = 1; i <= m; ++i) {
        std::vector<int> ids = boundary_ids_of_subset(b.frames[static_cast<std::size_t>(i - 1)], all, c);
        sort_by_prec(b.frames[static_cast<std::size_t>(i - 1)], ids);
        for (int id : ids) b.wedge_sets[static_cast<std::size_t>(id)].insert(i);
        b.per_wedge[static_cast<std::size_t>(i - 1)] = std::move(ids);
    }

    for (int id = 0; id < static_cast<int>(h.size()); ++id)
        if (!b.wedge_sets[static_cast<std::size_t>(id)].empty()) b.boundary_ids.push_back(id);

    // Shared boundary points of consecutive wedges: at most one in the
    // closed case. In the open case the shared points of adjacent wedges
    // sort the same way under both precs whenever the two open wedges
    // overlap past their common edge direction; for quadrilaterals (n = 2)
    // the wedges merely abut, collinear configurations can disagree, and the
    // block order below remains well defined, so this is not enforced.
    for (int i = 1; i <= m && c == Closedness::Closed; ++i) {
        const int j = (i % m) + 1;
        std::vector<int> shared;
        for (int id : b.per_wedge[static_cast<std::size_t>(i - 1)])
            if (b.wedge_sets[static_cast<std::size_t>(id)].count(j)) shared.push_back(id);
        if (shared.size() > 1)
            throw StructuralViolation("more than one point boundary for consecutive wedges " +
                                      std::to_string(i) + "," + std::to_string(j));
    }

    std::map<Point, std::set<int>> sets_by_point;
    for (int id : b.boundary_ids)
        sets_by_point.emplace(h[static_cast<std::size_t>(id)], b.wedge_sets[static_cast<std::size_t>(id)]);
    const std::set<Point> singular = detect_singular(sets_by_point, n);

    std::vector<char> singular_flag(h.size(), 0);
    for (int id : b.boundary_ids) {
        const Point& p = h[static_cast<std::size_t>(id)];
        if (singular.count(p)) singular_flag[static_cast<std::size_t>(id)] = 1;
    }
    if (!singular.empty()) {
        const std::set<int>& first = sets_by_point.at(*singular.begin());
        b.singular_pair = {*first.begin(), *std::next(first.begin())};
        b.rotation = b.singular_pair.first - 1;
    }

    for (int id : b.boundary_ids) {
        BoundaryEntry e;
        e.point = h[static_cast<std::size_t>(id)];
        e.wedge_indices = b.wedge_sets[static_cast<std::size_t>(id)];
        e.type = *e.wedge_indices.begin();
        e.singular = singular_flag[static_cast<std::size_t>(id)] != 0;
        b.entries.emplace(e.point, std::move(e));
    }

    // Cyclic sequence: for each normalized segment j, the points of
    // normalized type j sorted by prec of the corresponding original wedge.
    // Singular points contribute an entry to segment 1 and to segment n+1.
    const auto norm_type = [&](int id) {
        int best = m + 1;
        for (int i : b.wedge_sets[static_cast<std::size_t>(id)]) best = std::min(best, b.norm_index(i));
        return best;
    };
    for (int j = 1; j <= m; ++j) {
        std::vector<int> members;
        for (int id : b.boundary_ids) {
            if (singular_flag[static_cast<std::size_t>(id)]) {
                if (j == 1 || j == n + 1) members.push_back(id);
            } else if (norm_type(id) == j) {
                members.push_back(id);
            }
        }
        const int oi = b.orig_index(j);
        sort_by_prec(b.frames[static_cast<std::size_t>(oi - 1)], members);
        for (int id : members) {
            CyclicEntry e;
            e.point_id = id;
            e.norm_type = j;
            e.orig_type = b.entries.at(h[static_cast<std::size_t>(id)]).type;
            e.from_singular_dup = singular_flag[static_cast<std::size_t>(id)] != 0;
            b.cyclic.push_back(e);
        }
    }

    const std::size_t expected = b.boundary_ids.size() + singular.size();
    if (b.cyclic.size() != expected)
        throw StructuralViolation("cyclic sequence length mismatch");
    return b;
}

std::vector<std::pair<int, int>> wedge_trace_intervals(const BoundaryStructure& b,
                                                       const WedgePlacement& w) {
    const int len = static_cast<int>(b.cyclic.size());
    std::vector<std::pair<int, int>> out;
    if (len == 0) return out;
    std::vector<char> in(static_cast<std::size_t>(len), 0);
    bool all = true, none = true;
    for (int k = 0; k < len; ++k) {
        const Point& p = b.points[static_cast<std::size_t>(b.cyclic[static_cast<std::size_t>(k)].point_id)];
        in[static_cast<std::size_t>(k)] = wedge_contains(w, p) ? 1 : 0;
        (in[static_cast<std::size_t>(k)] ? none : all) = false;
    }
    if (none) return out;
    if (all) { out.emplace_back(0, len); return out; }
    for (int k = 0; k < len; ++k) {
        const int prev = (k + len - 1) % len;
        if (in[static_cast<std::size_t>(k)] && !in[static_cast<std::size_t>(prev)]) {
            int run = 0;
            while (in[static_cast<std::size_t>((k + run) % len)]) ++run;
            out.emplace_back(k, run);
        }
    }
    return out;
}

std::set<Point> detect_rich(const PointSet& h, const Polygon& s, Closedness c,
                            const BoundaryStructure& b) {
    (void)c;  // the trace family of closed and open placements coincides
    std::set<Point> rich;
    const int n_pts = static_cast<int>(h.size());
    if (n_pts == 0) return rich;
    const int m = s.side_count();
    for (int i = 1; i <= m; ++i) {
        const WedgeFrame& f = b.frames[static_cast<std::size_t>(i - 1)];
        // Point ids sorted by rank_t descending (global t order).
        std::vector<int> t_order(static_cast<std::size_t>(n_pts));
        std::iota(t_order.begin(), t_order.end(), 0);
        std::sort(t_order.begin(), t_order.end(), [&](int a, int bq) {
            return f.rank_t[static_cast<std::size_t>(a)] > f.rank_t[static_cast<std::size_t>(bq)];
        });
        // Group ids by rank_s descending.
        std::vector<int> s_order(static_cast<std::size_t>(n_pts));
        std::iota(s_order.begin(), s_order.end(), 0);
        std::sort(s_order.begin(), s_order.end(), [&](int a, int bq) {
            return f.rank_s[static_cast<std::size_t>(a)] > f.rank_s[static_cast<std::size_t>(bq)];
        });
        std::vector<char> active(static_cast<std::size_t>(n_pts), 0);
        std::size_t taken = 0;
        while (taken < s_order.size()) {
            const int rs = f.rank_s[static_cast<std::size_t>(s_order[taken])];
            while (taken < s_order.size() &&
                   f.rank_s[static_cast<std::size_t>(s_order[taken])] == rs) {
                active[static_cast<std::size_t>(s_order[taken])] = 1;
                ++taken;
            }
            // Walk active points by descending rank_t, whole tie-groups at a
            // time; a trace with exactly one boundary point and an interior
            // point witnesses richness of that boundary point.
            int boundary_seen = 0, interior_seen = 0, lone_boundary = -1;
            std::size_t k = 0;
            while (k < t_order.size()) {
                const int rt = f.rank_t[static_cast<std::size_t>(t_order[k])];
                std::size_t g = k;
                while (g < t_order.size() &&
                       f.rank_t[static_cast<std::size_t>(t_order[g])] == rt) {
                    const int id = t_order[g];
                    if (active[static_cast<std::size_t>(id)]) {
                        if (b.is_boundary(id)) { ++boundary_seen; lone_boundary = id; }
                        else ++interior_seen;
                    }
                    ++g;
                }
                if (boundary_seen >= 2) break;
                if (boundary_seen == 1 && interior_seen >= 1)
                    rich.insert(h[static_cast<std::size_t>(lone_boundary)]);
                k = g;
            }
        }
    }
    return rich;
}

LevelDecomposition level_peel(const PointSet& h, const Polygon& s) {
    require_distinct(h);
    LevelDecomposition out;
    if (h.empty()) return out;
    const std::vector<WedgeFrame> frames = build_wedge_frames(h, s);
    std::vector<int> alive(h.size());
    std::iota(alive.begin(), alive.end(), 0);
    while (!alive.empty()) {
        std::set<int> level_ids;
        for (const WedgeFrame& f : frames)
            for (int id : boundary_ids_of_subset(f, alive, Closedness::Open)) level_ids.insert(id);
        if (level_ids.empty())
            throw StructuralViolation("nonempty set with empty open-wedge boundary");
        PointSet level;
        const int level_index = static_cast<int>(out.levels.size());
        for (int id : level_ids) {
            level.push_back(h[static_cast<std::size_t>(id)]);
            out.level_of[h[static_cast<std::size_t>(id)]] = level_index;
        }
        out.levels.push_back(std::move(level));
        std::vector<int> next;
        for (int id : alive)
            if (!level_ids.count(id)) next.push_back(id);
        alive = std::move(next);
    }
    return out;
}

}  // namespace covdec
