#pragma once

#include "pse/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace pse {

// ── Segment predicates ──────────────────────────────────────────────

/// True iff p lies on the closed segment [a,b].
inline bool on_segment_closed(const Pt& p, const Pt& a, const Pt& b) {
    if (orient(a, b, p) != 0) return false;
    if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x)) return false;
    if (p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y)) return false;
    return true;
}

/// True iff p lies on segment (a,b) excluding both endpoints.
inline bool on_segment_open(const Pt& p, const Pt& a, const Pt& b) {
    return p != a && p != b && on_segment_closed(p, a, b);
}

enum class SegContact { None, SharedEndpoint, Improper };

/// Classify the contact between segments [a,b] and [c,d].
/// SharedEndpoint means they meet in exactly one point which is an endpoint
/// of both; every other kind of contact (proper crossing, endpoint in the
/// interior of the other segment, collinear overlap) is Improper.
inline SegContact segment_contact(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // Collinear (or degenerate) case: count shared closed-interval overlap.
        bool ca = on_segment_closed(c, a, b), da = on_segment_closed(d, a, b);
        bool ac = on_segment_closed(a, c, d), bc = on_segment_closed(b, c, d);
        if (!ca && !da && !ac && !bc) return SegContact::None;
        // Any overlap of positive length is improper; a single shared point is
        // fine only when it is an endpoint of both.
        std::vector<Pt> hits;
        auto add = [&hits](const Pt& p) {
            for (auto& q : hits)
                if (q == p) return;
            hits.push_back(p);
        };
        if (ca) add(c);
        if (da) add(d);
        if (ac) add(a);
        if (bc) add(b);
        if (hits.size() > 1) return SegContact::Improper;
        const Pt& p = hits[0];
        bool end1 = (p == a || p == b), end2 = (p == c || p == d);
        return (end1 && end2) ? SegContact::SharedEndpoint : SegContact::Improper;
    }

    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
        // They intersect in exactly one point.
        if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return SegContact::Improper;  // proper cross
        // Intersection point is an endpoint of at least one segment.
        Pt p;
        if (o1 == 0) p = c;
        else if (o2 == 0) p = d;
        else if (o3 == 0) p = a;
        else p = b;
        bool end1 = (p == a || p == b), end2 = (p == c || p == d);
        return (end1 && end2) ? SegContact::SharedEndpoint : SegContact::Improper;
    }
    return SegContact::None;
}

// ── Polygons ────────────────────────────────────────────────────────

/// Twice the signed area (positive for counterclockwise).
inline Rat polygon_area2(const std::vector<Pt>& poly) {
    Rat s = 0;
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % m];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

/// Clip a convex polygon by the closed halfplane left of the directed line a->b.
inline std::vector<Pt> clip_halfplane(const std::vector<Pt>& poly, const Pt& a, const Pt& b) {
    std::vector<Pt> out;
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % m];
        Rat sp = cross(a, b, p), sq = cross(a, b, q);
        bool pin = sp >= 0, qin = sq >= 0;
        if (pin) out.push_back(p);
        if (pin != qin) {
            Rat t = sp / (sp - sq);
            out.push_back({p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t});
        }
    }
    // Drop duplicate consecutive points.
    std::vector<Pt> ded;
    for (auto& p : out) {
        if (ded.empty() || !(ded.back() == p)) ded.push_back(p);
    }
    if (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
    return ded;
}

/// Kernel of a simple polygon given counterclockwise (interior on the left):
/// the intersection of the left halfplanes of all directed boundary edges,
/// clipped to the polygon's bounding box. Empty or degenerate result means
/// the polygon is not star-shaped (no interior kernel point).
inline std::vector<Pt> polygon_kernel(const std::vector<Pt>& poly) {
    Rat xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
    for (auto& p : poly) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    std::vector<Pt> ker = {{xmin - 1, ymin - 1}, {xmax + 1, ymin - 1}, {xmax + 1, ymax + 1}, {xmin - 1, ymax + 1}};
    size_t m = poly.size();
    for (size_t i = 0; i < m && !ker.empty(); ++i) ker = clip_halfplane(ker, poly[i], poly[(i + 1) % m]);
    return ker;
}

/// Average of the vertices; interior point whenever the convex polygon has
/// positive area.
inline Pt convex_centroid(const std::vector<Pt>& poly) {
    Rat sx = 0, sy = 0;
    for (auto& p : poly) {
        sx += p.x;
        sy += p.y;
    }
    Rat m(static_cast<long>(poly.size()));
    return {sx / m, sy / m};
}

/// Interior point of the kernel, or nullopt when the polygon is not
/// star-shaped with a full-dimensional kernel.
inline std::optional<Pt> kernel_point(const std::vector<Pt>& poly) {
    auto ker = polygon_kernel(poly);
    if (ker.size() < 3) return std::nullopt;
    if (polygon_area2(ker) <= 0) return std::nullopt;
    return convex_centroid(ker);
}

// ── Small-denominator snapping ──────────────────────────────────────

inline BigInt rat_floor(const Rat& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

/// The rational with the smallest denominator strictly inside (lo, hi).
inline Rat simplest_in_open(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) fail(Err::Internal, "simplest_in_open: empty interval");
    BigInt fl = rat_floor(lo);
    Rat a = lo - Rat(fl), b = hi - Rat(fl);  // 0 <= a < 1, a < b
    if (b > 1) return Rat(fl + 1);
    if (a == 0) {
        // (0, b) with b <= 1: smallest denominator q such that 1/q < b.
        BigInt q = rat_floor(Rat(1) / b) + 1;
        return Rat(fl) + Rat(BigInt(1), q);
    }
    // Invert into (1/b, 1/a) and recurse.
    Rat inner = simplest_in_open(Rat(1) / b, Rat(1) / a);
    return Rat(fl) + Rat(1) / inner;
}

/// A point with small coordinate representations strictly inside a convex
/// polygon of positive area. Works by centering a safe axis-aligned box at
/// the centroid and snapping each coordinate to the simplest rational in it.
inline Pt snap_inside_convex(const std::vector<Pt>& conv) {
    Pt c = convex_centroid(conv);
    // Largest t with the box [c.x±t]×[c.y±t] inside every edge halfplane:
    // margin / (|dx| + |dy|) per edge, then halved.
    Rat t(-1);
    size_t m = conv.size();
    for (size_t i = 0; i < m; ++i) {
        const Pt& a = conv[i];
        const Pt& b = conv[(i + 1) % m];
        Rat margin = cross(a, b, c);
        if (margin <= 0) return c;  // centroid sits on the boundary: give up on snapping
        Rat dx = b.x - a.x, dy = b.y - a.y;
        Rat denom = abs(dx) + abs(dy);
        if (denom == 0) continue;
        Rat ti = margin / denom;
        if (t < 0 || ti < t) t = ti;
    }
    if (t <= 0) return c;
    t /= 2;
    return {simplest_in_open(c.x - t, c.x + t), simplest_in_open(c.y - t, c.y + t)};
}

// ── Convex position ─────────────────────────────────────────────────

/// Indices of the convex hull in counterclockwise order (strict hull:
/// collinear mid-points are dropped). Requires >= 1 point.
inline std::vector<int> convex_hull(const std::vector<Pt>& pts) {
    int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&pts](int i, int j) {
        if (pts[i].x != pts[j].x) return pts[i].x < pts[j].x;
        return pts[i].y < pts[j].y;
    });
    if (n <= 2) return idx;
    std::vector<int> h;
    auto build = [&](auto begin, auto end) {
        size_t base = h.size();
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= base + 2 && orient(pts[h[h.size() - 2]], pts[h.back()], pts[*it]) <= 0)
                h.pop_back();
            h.push_back(*it);
        }
    };
    build(idx.begin(), idx.end());
    h.pop_back();
    build(idx.rbegin(), idx.rend());
    h.pop_back();
    return h;
}

struct OneSidedOrder {
    std::vector<int> order;  // point indices p_1..p_k along the hull
    // Directed chord p_1 -> p_k; every other point is strictly on its left,
    // and all projections onto the chord direction are strictly between the
    // endpoints (so some rotation makes p_1 leftmost and p_k rightmost).
};

/// Check one-sided convex position. Returns the hull order with the extreme
/// pair first/last, or nullopt when the set is not one-sided convex
/// (not strictly convex, or no hull edge admits the required rotation).
inline std::optional<OneSidedOrder> one_sided_convex_order(const std::vector<Pt>& pts) {
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) return std::nullopt;
    if (n == 1) return OneSidedOrder{{0}};
    if (n == 2) return OneSidedOrder{{0, 1}};
    auto hull = convex_hull(pts);
    if (static_cast<int>(hull.size()) != n) return std::nullopt;  // not strictly convex position
    int h = n;
    for (int e = 0; e < h; ++e) {
        // Candidate extreme chord: directed hull edge u->v; every other hull
        // point is strictly on its left. The rotation aligning u->v with the
        // x-axis makes u leftmost and v rightmost iff all projections onto
        // the chord direction lie strictly between the two endpoints.
        int u = hull[e], v = hull[(e + 1) % h];
        Pt d{pts[v].x - pts[u].x, pts[v].y - pts[u].y};
        Rat len2 = d.x * d.x + d.y * d.y;
        bool ok = true;
        for (int t = 0; t < h && ok; ++t) {
            int w = hull[t];
            if (w == u || w == v) continue;
            Rat pr = d.x * (pts[w].x - pts[u].x) + d.y * (pts[w].y - pts[u].y);
            if (!(pr > 0 && pr < len2)) ok = false;
        }
        if (!ok) continue;
        OneSidedOrder res;
        // Walk the hull from u to v the long way (over the arc); this is the
        // left-to-right order of the points once u->v is horizontal.
        res.order.push_back(u);
        for (int t = (e - 1 + h) % h; t != e; t = (t - 1 + h) % h) {
            res.order.push_back(hull[t]);
            if (t == (e + 1) % h) break;
        }
        return res;
    }
    return std::nullopt;
}

}  // namespace pse
