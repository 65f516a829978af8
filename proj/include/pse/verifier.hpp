#pragma once

#include "pse/bounds.hpp"
#include "pse/drawing_types.hpp"
#include "pse/plane_graph.hpp"

#include <algorithm>
#include <sstream>

namespace pse {

struct BoundCheck {
    std::string name;
    long required = 0;
    long achieved = 0;
    bool pass = false;
};

struct VerificationReport {
    bool planarity = false;
    std::string planarity_witness;
    bool embedding = false;
    std::string embedding_witness;
    bool s_coverage = false;
    std::string s_witness;
    std::vector<BoundCheck> bounds;

    bool pass() const { return planarity && embedding && s_coverage; }

    bool all_bounds_pass() const {
        for (auto& b : bounds)
            if (!b.pass) return false;
        return true;
    }
};

namespace verify_detail {

struct SegRec {
    int u, v;
    double xmin, xmax, ymin, ymax;
};

inline SegRec seg_record(int u, int v, const std::vector<Pt>& c) {
    auto [xlu, xhu] = rat_bounds(c[u].x);
    auto [xlv, xhv] = rat_bounds(c[v].x);
    auto [ylu, yhu] = rat_bounds(c[u].y);
    auto [ylv, yhv] = rat_bounds(c[v].y);
    return {u, v, std::min(xlu, xlv), std::max(xhu, xhv), std::min(ylu, ylv), std::max(yhu, yhv)};
}

inline std::string edge_name(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

/// Filtered exact predicates over vertex coordinates: a double evaluation
/// with a conservative error bound decides the common cases, anything
/// uncertain falls back to rational arithmetic.
class Filtered {
public:
    explicit Filtered(const std::vector<Pt>& coords) : c_(coords) {
        xs_.reserve(coords.size());
        ys_.reserve(coords.size());
        for (auto& p : coords) {
            xs_.push_back(p.x.convert_to<double>());
            ys_.push_back(p.y.convert_to<double>());
        }
    }

    int orient3(int a, int b, int p) const {
        double t1 = (xs_[b] - xs_[a]) * (ys_[p] - ys_[a]);
        double t2 = (ys_[b] - ys_[a]) * (xs_[p] - xs_[a]);
        double det = t1 - t2;
        double mag = std::abs(t1) + std::abs(t2);
        if (std::isfinite(det) && std::isfinite(mag)) {
            double err = mag * 1e-12 + 1e-300;
            if (det > err) return 1;
            if (det < -err) return -1;
        }
        return orient(c_[a], c_[b], c_[p]);
    }

    SegContact contact(int a, int b, int p, int q) const {
        // Shared endpoint: only a collinear overlap can be improper.
        int shared = -1, ra = -1, rb = -1;
        if (a == p) shared = a, ra = b, rb = q;
        else if (a == q) shared = a, ra = b, rb = p;
        else if (b == p) shared = b, ra = a, rb = q;
        else if (b == q) shared = b, ra = a, rb = p;
        if (shared >= 0) {
            if (ra != rb && orient3(shared, ra, rb) != 0) return SegContact::SharedEndpoint;
            return segment_contact(c_[a], c_[b], c_[p], c_[q]);
        }
        int o1 = orient3(a, b, p), o2 = orient3(a, b, q);
        if (o1 != 0 && o1 == o2) return SegContact::None;
        int o3 = orient3(p, q, a), o4 = orient3(p, q, b);
        if (o3 != 0 && o3 == o4) return SegContact::None;
        return segment_contact(c_[a], c_[b], c_[p], c_[q]);
    }

    bool on_open(int p, int a, int b) const {
        if (orient3(a, b, p) != 0) return false;
        return on_segment_open(c_[p], c_[a], c_[b]);
    }

private:
    const std::vector<Pt>& c_;
    std::vector<double> xs_, ys_;
};

}  // namespace verify_detail

/// Exact planarity check: no two edges may share anything except a common
/// endpoint, no vertex may lie in the relative interior of a non-incident
/// edge (or coincide with another vertex). A float-box sweep prunes the
/// candidate pairs; every surviving pair is decided with rational
/// arithmetic.
inline bool check_planarity(const PlaneGraph& g, const Drawing& d, std::string& witness) {
    const auto& c = d.coords;
    require(static_cast<int>(c.size()) == g.n, Err::BadInput, "drawing size mismatch");

    // Distinct vertex positions.
    {
        std::vector<int> idx(g.n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&c](int a, int b) {
            if (c[a].x != c[b].x) return c[a].x < c[b].x;
            return c[a].y < c[b].y;
        });
        for (int i = 0; i + 1 < g.n; ++i)
            if (c[idx[i]] == c[idx[i + 1]]) {
                witness = "vertices " + std::to_string(idx[i]) + " and " + std::to_string(idx[i + 1]) +
                          " share a point";
                return false;
            }
    }

    auto edges = g.edges();
    verify_detail::Filtered pred(c);
    std::vector<verify_detail::SegRec> recs;
    recs.reserve(edges.size());
    for (auto [u, v] : edges) recs.push_back(verify_detail::seg_record(u, v, c));
    std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) { return a.xmin < b.xmin; });

    // Segment pairs via a sweep over x with an active window.
    {
        std::vector<int> active;
        for (int i = 0; i < static_cast<int>(recs.size()); ++i) {
            const auto& r = recs[i];
            std::vector<int> still;
            still.reserve(active.size() + 1);
            for (int j : active) {
                if (recs[j].xmax < r.xmin) continue;
                still.push_back(j);
                const auto& o = recs[j];
                if (o.ymax < r.ymin || r.ymax < o.ymin) continue;
                if (pred.contact(r.u, r.v, o.u, o.v) == SegContact::Improper) {
                    witness = "edges " + verify_detail::edge_name(r.u, r.v) + " and " +
                              verify_detail::edge_name(o.u, o.v) + " intersect";
                    return false;
                }
            }
            still.push_back(i);
            active.swap(still);
        }
    }

    // Vertices against non-incident edges.
    {
        std::vector<double> vxlo(g.n), vxhi(g.n), vylo(g.n), vyhi(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::tie(vxlo[v], vxhi[v]) = rat_bounds(c[v].x);
            std::tie(vylo[v], vyhi[v]) = rat_bounds(c[v].y);
        }
        std::vector<int> vs(g.n);
        std::iota(vs.begin(), vs.end(), 0);
        std::sort(vs.begin(), vs.end(), [&vxlo](int a, int b) { return vxlo[a] < vxlo[b]; });
        std::vector<double> sorted_vx(g.n);
        for (int i = 0; i < g.n; ++i) sorted_vx[i] = vxlo[vs[i]];
        for (const auto& r : recs) {
            auto lo = std::lower_bound(sorted_vx.begin(), sorted_vx.end(), r.xmin) - sorted_vx.begin();
            for (size_t i = lo; i < sorted_vx.size(); ++i) {
                int p = vs[i];
                if (vxlo[p] > r.xmax) break;
                if (p == r.u || p == r.v) continue;
                if (vyhi[p] < r.ymin || vylo[p] > r.ymax) continue;
                if (pred.on_open(p, r.u, r.v)) {
                    witness = "vertex " + std::to_string(p) + " lies inside edge " +
                              verify_detail::edge_name(r.u, r.v);
                    return false;
                }
            }
        }
    }
    witness.clear();
    return true;
}

/// Quadratic all-pairs reference for check_planarity (the oracle the sweep
/// must agree with).
inline bool check_planarity_brute(const PlaneGraph& g, const Drawing& d, std::string& witness) {
    const auto& c = d.coords;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (c[a] == c[b]) {
                witness = "coincident vertices";
                return false;
            }
    auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [p, q] = edges[j];
            if (segment_contact(c[a], c[b], c[p], c[q]) == SegContact::Improper) {
                witness = "edges " + verify_detail::edge_name(a, b) + " and " + verify_detail::edge_name(p, q) +
                          " intersect";
                return false;
            }
        }
    for (int p = 0; p < g.n; ++p)
        for (auto [a, b] : edges) {
            if (p == a || p == b) continue;
            if (on_segment_open(c[p], c[a], c[b])) {
                witness = "vertex " + std::to_string(p) + " inside an edge";
                return false;
            }
        }
    witness.clear();
    return true;
}

namespace verify_detail {

/// Exact counterclockwise-angle comparator around an origin.
inline bool angle_less(const Pt& origin, const Pt& a, const Pt& b) {
    Rat ax = a.x - origin.x, ay = a.y - origin.y;
    Rat bx = b.x - origin.x, by = b.y - origin.y;
    auto half = [](const Rat& x, const Rat& y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

}  // namespace verify_detail

/// The drawing's rotation system (counterclockwise neighbor order by exact
/// angles) must equal the host's, and the unbounded face must be the host's
/// designated outer face. Detects reflections; invariant under rigid motion
/// and scaling.
inline bool check_embedding(const PlaneGraph& g, const Drawing& d, std::string& witness) {
    const auto& c = d.coords;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < 3) continue;
        std::vector<int> got = g.rot[v];
        std::sort(got.begin(), got.end(),
                  [&](int a, int b) { return verify_detail::angle_less(c[v], c[a], c[b]); });
        // Cyclic comparison against the stored rotation.
        auto it = std::find(got.begin(), got.end(), g.rot[v][0]);
        std::rotate(got.begin(), it, got.end());
        if (got != g.rot[v]) {
            witness = "rotation mismatch at vertex " + std::to_string(v);
            return false;
        }
    }
    if (g.edge_count() >= 3 && !g.outer.empty()) {
        // The unbounded face is the one left of (vstar -> b), where vstar is
        // the lexicographically extreme vertex and b the neighbor with the
        // largest counterclockwise angle measured from due west: its face
        // corner at vstar contains the westward direction.
        int vstar = 0;
        for (int v = 1; v < g.n; ++v)
            if (c[v].x < c[vstar].x || (c[v].x == c[vstar].x && c[v].y < c[vstar].y)) vstar = v;
        if (g.degree(vstar) >= 1) {
            Pt west{c[vstar].x - 1, c[vstar].y};
            auto abs_less = [&](const Pt& p, const Pt& q) { return verify_detail::angle_less(c[vstar], p, q); };
            auto from_west_less = [&](int s, int t) {
                bool s_after = abs_less(west, c[s]);
                bool t_after = abs_less(west, c[t]);
                if (s_after != t_after) return s_after;  // after-west sectors come first
                return abs_less(c[s], c[t]);
            };
            int b = g.rot[vstar][0];
            for (int wv : g.rot[vstar])
                if (from_west_less(b, wv)) b = wv;
            auto walk = g.trace_face(vstar, b);
            if (!cyclic_equal(walk, g.outer)) {
                witness = "unbounded face differs from the designated outer face";
                return false;
            }
        }
    }
    witness.clear();
    return true;
}

/// s_assignment must be a bijection onto S with exact coordinate equality.
inline bool check_s_coverage(const PlaneGraph& g, const Drawing& d, const std::vector<Pt>& s,
                             std::string& witness) {
    if (d.s_assignment.size() != s.size()) {
        witness = "assignment size differs from |S|";
        return false;
    }
    std::set<int> used;
    for (size_t i = 0; i < s.size(); ++i) {
        int v = d.s_assignment[i];
        if (v < 0 || v >= g.n) {
            witness = "assignment out of range";
            return false;
        }
        if (!used.insert(v).second) {
            witness = "vertex " + std::to_string(v) + " assigned twice";
            return false;
        }
        if (!(d.coords[v] == s[i])) {
            witness = "vertex " + std::to_string(v) + " is not exactly on point " + std::to_string(i);
            return false;
        }
    }
    witness.clear();
    return true;
}

/// Kernel sample of a star-shaped polygon, or nullopt (spec: check_star_shaped).
inline std::optional<Pt> check_star_shaped(const std::vector<Pt>& poly) { return kernel_point(poly); }

/// Compare achieved substructure sizes and embedded point counts against the
/// paper's closed-form bounds.
inline std::vector<BoundCheck> audit_bounds(long n, bool convex_mode, long substructure_size, long embedded_points) {
    auto gu = guarantees(n);
    std::vector<BoundCheck> out;
    auto add = [&out](const std::string& name, long req, long got) {
        out.push_back({name, req, got, got >= req});
    };
    if (convex_mode) {
        add("theorem2_chain", gu.convex_bound, substructure_size);
        add("fitC_embedded", gu.fit_convex_bound, embedded_points);
    } else {
        add("theorem1_side_path", gu.general_bound, substructure_size);
        add("induced_path", gu.induced_path_bound, substructure_size);
    }
    return out;
}

/// Full verification of a drawing against its host graph and point set.
inline VerificationReport check_all(const PlaneGraph& g, const Drawing& d, const std::vector<Pt>& s) {
    VerificationReport rep;
    rep.planarity = check_planarity(g, d, rep.planarity_witness);
    if (rep.planarity) rep.embedding = check_embedding(g, d, rep.embedding_witness);
    else rep.embedding_witness = "skipped: planarity failed";
    rep.s_coverage = check_s_coverage(g, d, s, rep.s_witness);
    return rep;
}

}  // namespace pse
