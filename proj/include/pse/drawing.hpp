#pragma once

#include "pse/star_fill.hpp"
#include "pse/substructure.hpp"
#include "pse/verifier.hpp"

namespace pse {

/// Similarity frame: frame coordinates are s = dir.(p - origin),
/// t = perp(dir).(p - origin); mapping back divides by |dir|^2, so points
/// stay rational both ways.
struct Frame {
    Pt origin{Rat(0), Rat(0)};
    Pt dir{Rat(1), Rat(0)};

    Rat s_of(const Pt& p) const { return dir.x * (p.x - origin.x) + dir.y * (p.y - origin.y); }
    Rat t_of(const Pt& p) const { return -dir.y * (p.x - origin.x) + dir.x * (p.y - origin.y); }
    Pt to_world(const Rat& s, const Rat& t) const {
        Rat den = dir.x * dir.x + dir.y * dir.y;
        return {origin.x + (s * dir.x - t * dir.y) / den, origin.y + (s * dir.y + t * dir.x) / den};
    }
};

/// A rational direction under which all points project distinctly, composed
/// with the translation taking the projection-leftmost point to the origin.
/// Only finitely many directions are bad, so the deterministic search
/// terminates.
inline Frame normalize_direction(const std::vector<Pt>& pts) {
    auto distinct_under = [&pts](const Pt& d) {
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (d.x * (pts[i].x - pts[j].x) + d.y * (pts[i].y - pts[j].y) == 0) return false;
        return true;
    };
    Frame fr;
    for (long m = 1;; ++m) {
        for (long a = m; a >= 0; --a) {
            long b = m - a;
            for (auto [dx, dy] : {std::pair{a, b}, {a, -b}}) {
                if (dx == 0 && dy != 1) continue;
                if (dy == 0 && dx != 1) continue;
                Pt d{Rat(dx), Rat(dy)};
                if (!distinct_under(d)) continue;
                fr.dir = d;
                int left = 0;
                for (size_t i = 1; i < pts.size(); ++i)
                    if (fr.s_of(pts[i]) < fr.s_of(pts[left])) left = static_cast<int>(i);
                fr.origin = pts[left];
                return fr;
            }
        }
    }
}

// ── Lemma drawers ───────────────────────────────────────────────────

/// Straight-line drawing of a maximal plane host that contains the external
/// outerpath `op`: the first |S| side-path vertices land exactly on S (in
/// left-to-right frame order), the second side path hangs on a steep
/// downward stack, the remaining outer vertex goes high above, and every
/// face is completed as a star-shaped region.
inline Drawing draw_side_path(const PlaneGraph& host, const Outerpath& op, const PointSet& s) {
    int k = static_cast<int>(s.pts.size());
    const auto& P = op.side_a;
    require(static_cast<int>(P.size()) >= k, Err::SidePathTooShort, "side path shorter than the point set");
    require(k >= 1, Err::BadInput, "empty point set");

    Frame fr = normalize_direction(s.pts);
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fr.s_of(s.pts[a]) < fr.s_of(s.pts[b]); });

    // Frame coordinates of the (possibly augmented) point sequence.
    std::vector<Rat> ss, ts;
    for (int i : order) {
        ss.push_back(fr.s_of(s.pts[i]));
        ts.push_back(fr.t_of(s.pts[i]));
    }
    Rat gap = 1;
    if (k >= 2) {
        gap = ss[1] - ss[0];
        for (int i = 1; i + 1 < k; ++i) gap = std::min(gap, Rat(ss[i + 1] - ss[i]));
    }
    while (ss.size() < P.size()) {
        ss.push_back(ss.back() + gap);
        ts.push_back(ts.back());
    }
    int m = static_cast<int>(P.size());
    Rat dx = m >= 2 ? ss[1] - ss[0] : Rat(1);
    for (int i = 1; i + 1 < m; ++i) dx = std::min(dx, Rat(ss[i + 1] - ss[i]));
    Rat dy = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) dy = std::max(dy, Rat(abs(ts[i] - ts[j])));
    Rat sigma = (dy + 1) / dx;
    Rat sk = ss.back();

    Drawing d;
    d.coords.assign(host.n, Pt{});
    std::vector<char> drawn(host.n, 0);
    for (int i = 0; i < m; ++i) {
        d.coords[P[i]] = fr.to_world(ss[i], ts[i]);
        drawn[P[i]] = 1;
    }
    // Second side path: ordered from the external boundary inwards as
    // side_b[0..]; the paper's v_i counts from the interior end.
    int h = static_cast<int>(op.side_b.size());
    for (int i = 1; i <= h; ++i) {
        int vtx = op.side_b[h - i];
        d.coords[vtx] = fr.to_world(sk + 1, -sigma * (sk + i));
        drawn[vtx] = 1;
    }
    // The unique external vertex outside the outerpath, when there is one.
    for (int wv : host.outer) {
        if (drawn[wv]) continue;
        d.coords[wv] = fr.to_world(sk + 2, sigma * (sk + 2));
        drawn[wv] = 1;
    }
    complete_drawing(host, d.coords, drawn);

    d.s_assignment.assign(k, -1);
    for (int j = 0; j < k; ++j) d.s_assignment[order[j]] = P[j];
    return d;
}

/// One-sided convex placement of an induced biconnected outerplanar
/// subgraph: the boundary path on the convex arc, chords inside, the last
/// outer vertex high above both extreme support lines.
inline Drawing draw_convex(const PlaneGraph& host, const ChainSubgraph& cs, const PointSet& s) {
    int k = static_cast<int>(s.pts.size());
    auto ord = one_sided_convex_order(s.pts);
    require(ord.has_value(), Err::NotOneSidedConvex, "points are not in one-sided convex position");
    int kc = static_cast<int>(cs.boundary.size());
    require(kc >= k, Err::SubgraphTooSmall, "outerplanar subgraph smaller than the point set");

    // Hull-ordered sequence, augmented between the two rightmost points.
    std::vector<std::pair<Pt, int>> seq;  // (point, original index or -1)
    for (int i : ord->order) seq.emplace_back(s.pts[i], i);
    if (k == 1) seq.emplace_back(Pt{seq[0].first.x + 1, seq[0].first.y}, -1);
    while (static_cast<int>(seq.size()) < kc) {
        int msz = static_cast<int>(seq.size());
        Pt a = seq[msz - 2].first, b = seq[msz - 1].first;
        Pt up{a.y - b.y, b.x - a.x};  // left normal of a->b
        // The new point bulges away from the rest of the hull.
        if (msz >= 3) {
            Pt prev = seq[msz - 3].first;
            if (cross(a, b, prev) > 0) up = Pt{-up.x, -up.y};
        }
        // The candidate must keep the whole sequence a one-sided convex
        // chain: projections onto the extreme chord strictly increasing,
        // consistent strict turns, middles strictly off the chord.
        auto chain_ok = [](const std::vector<std::pair<Pt, int>>& cand) {
            int m2 = static_cast<int>(cand.size());
            Pt f = cand.front().first, l = cand.back().first;
            Pt dch{l.x - f.x, l.y - f.y};
            for (int i = 0; i + 1 < m2; ++i) {
                Rat pa = dch.x * cand[i].first.x + dch.y * cand[i].first.y;
                Rat pb = dch.x * cand[i + 1].first.x + dch.y * cand[i + 1].first.y;
                if (!(pa < pb)) return false;
            }
            int side = 0;
            for (int i = 1; i + 1 < m2; ++i) {
                int sgn_chord = sgn(cross(f, l, cand[i].first));
                if (sgn_chord == 0) return false;
                if (side == 0) side = sgn_chord;
                if (side != sgn_chord) return false;
            }
            for (int i = 0; i + 2 < m2; ++i)
                if (sgn(cross(cand[i].first, cand[i + 1].first, cand[i + 2].first)) != -side) return false;
            return true;
        };
        Rat eps(1, 2);
        Pt mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        for (int tries = 0; tries < 300; ++tries, eps /= 2) {
            Pt c{mid.x + up.x * eps, mid.y + up.y * eps};
            std::vector<std::pair<Pt, int>> cand = seq;
            cand.insert(cand.end() - 1, {c, -1});
            if (chain_ok(cand)) {
                seq = std::move(cand);
                break;
            }
            require(tries < 299, Err::Internal, "point augmentation failed");
        }
    }

    // The boundary walk, rotated to start just past the extremal edge.
    std::vector<int> walk;
    for (int hv : cs.sf.hfaces[cs.sf.outer_hface]) walk.push_back(cs.sf.h2g[hv]);
    int msz = static_cast<int>(walk.size());
    int start = -1;
    for (int i = 0; i < msz; ++i) {
        int a = walk[i], b = walk[(i + 1) % msz];
        if (ekey(a, b) == ekey(cs.extremal.first, cs.extremal.second)) start = (i + 1) % msz;
    }
    require(start >= 0, Err::Internal, "extremal edge missing from the boundary walk");
    std::vector<int> pdraw;
    for (int i = 0; i < msz; ++i) pdraw.push_back(walk[(start + i) % msz]);

    Drawing d;
    d.coords.assign(host.n, Pt{});
    std::vector<char> drawn(host.n, 0);
    for (int j = 0; j < kc; ++j) {
        d.coords[pdraw[j]] = seq[j].first;
        drawn[pdraw[j]] = 1;
    }

    // The outer vertex w, strictly above every support line of the arc and
    // far enough that the whole arc sits inside triangle (p_1, p_k, w).
    int wv = -1;
    for (int ov : host.outer)
        if (!drawn[ov]) wv = ov;
    if (wv >= 0) {
        Pt p1 = seq.front().first, pk = seq.back().first;
        Pt dc{pk.x - p1.x, pk.y - p1.y};
        Pt dp{-dc.y, dc.x};
        if (kc >= 3 && cross(p1, pk, seq[1].first) < 0) dp = Pt{-dp.x, -dp.y};
        Pt base{(p1.x + pk.x) / 2, (p1.y + pk.y) / 2};
        Rat t(1);
        for (int tries = 0; tries < 300; ++tries, t *= 2) {
            Pt w{base.x + dp.x * t, base.y + dp.y * t};
            bool ok = true;
            for (int j = 0; j + 1 < kc && ok; ++j)
                if (!(cross(seq[j].first, seq[j + 1].first, w) > 0)) ok = false;
            for (int j = 1; j + 1 < kc && ok; ++j) {
                const Pt& p = seq[j].first;
                if (!(sgn(cross(p1, pk, p)) == sgn(cross(p1, pk, w)) && sgn(cross(pk, w, p)) == sgn(cross(pk, w, p1)) &&
                      sgn(cross(w, p1, p)) == sgn(cross(w, p1, pk))))
                    ok = false;
            }
            if (ok) {
                d.coords[wv] = w;
                drawn[wv] = 1;
                break;
            }
            require(tries < 299, Err::Internal, "could not place the apex above the support lines");
        }
    }
    complete_drawing(host, d.coords, drawn);

    d.s_assignment.assign(k, -1);
    for (int j = 0; j < kc; ++j)
        if (seq[j].second >= 0) d.s_assignment[seq[j].second] = pdraw[j];
    return d;
}

/// Drawing of a maximal plane graph around a fixed triangle: the inner face
/// fverts is drawn as tau, the three induced disjoint paths run outward from
/// its corners along rational pseudo-bisector rays, and the spacing doubles
/// until the skeleton verifies planar.
inline Drawing draw_triangle_bridge(const PlaneGraph& g2, const std::array<int, 3>& fverts,
                                    const std::array<Pt, 3>& tau, const std::array<std::vector<int>, 3>& paths) {
    // Path sanity: induced, pairwise disjoint, anchored on the face and the
    // external boundary.
    {
        std::set<int> seen;
        for (int c = 0; c < 3; ++c) {
            const auto& p = paths[c];
            require(!p.empty() && p.front() == fverts[c], Err::BadInput, "path must start on the inner face");
            bool outer_end = false;
            for (int ov : g2.outer)
                if (ov == p.back()) outer_end = true;
            require(outer_end, Err::BadInput, "path must end on the external boundary");
            for (size_t i = 0; i + 1 < p.size(); ++i)
                require(g2.has_edge(p[i], p[i + 1]), Err::PathsNotInduced, "path edge missing");
            for (size_t i = 0; i < p.size(); ++i)
                for (size_t j = i + 2; j < p.size(); ++j)
                    require(!g2.has_edge(p[i], p[j]), Err::PathsNotInduced, "path has a chord");
            for (int v : p) require(seen.insert(v).second, Err::PathsIntersect, "paths share a vertex");
        }
    }
    // Outward pseudo-bisector rays with rational directions.
    std::array<Pt, 3> ray;
    for (int c = 0; c < 3; ++c) {
        Pt e1{tau[(c + 1) % 3].x - tau[c].x, tau[(c + 1) % 3].y - tau[c].y};
        Pt e2{tau[(c + 2) % 3].x - tau[c].x, tau[(c + 2) % 3].y - tau[c].y};
        auto l1 = [](const Pt& p) { return Rat(abs(p.x) + abs(p.y)); };
        Rat w1 = l1(e2), w2 = l1(e1);
        Pt dir{-(e1.x * w1 + e2.x * w2), -(e1.y * w1 + e2.y * w2)};
        Rat scale = l1(dir);
        require(scale > 0, Err::BadInput, "degenerate triangle");
        ray[c] = {dir.x / scale, dir.y / scale};
    }

    std::vector<int> drawn_list;
    for (int c = 0; c < 3; ++c)
        for (int v : paths[c]) drawn_list.push_back(v);

    Rat spacing(1);
    for (int attempt = 0; attempt < 64; ++attempt, spacing *= 2) {
        Drawing d;
        d.coords.assign(g2.n, Pt{});
        std::vector<char> drawn(g2.n, 0);
        for (int c = 0; c < 3; ++c) {
            for (size_t j = 0; j < paths[c].size(); ++j) {
                Rat dist = spacing * static_cast<long>(j);
                d.coords[paths[c][j]] = {tau[c].x + ray[c].x * dist, tau[c].y + ray[c].y * dist};
                drawn[paths[c][j]] = 1;
            }
        }
        // Skeleton check: the drawn induced subgraph must be planar.
        bool ok = true;
        {
            std::vector<Edge> sedges;
            for (int a : drawn_list)
                for (int b : g2.rot[a])
                    if (drawn[b] && a < b) sedges.emplace_back(a, b);
            for (size_t i = 0; i < sedges.size() && ok; ++i)
                for (size_t j = i + 1; j < sedges.size() && ok; ++j) {
                    auto [a, b] = sedges[i];
                    auto [p, q] = sedges[j];
                    if (segment_contact(d.coords[a], d.coords[b], d.coords[p], d.coords[q]) ==
                        SegContact::Improper)
                        ok = false;
                }
            for (int v : drawn_list)
                for (auto [a, b] : sedges) {
                    if (v == a || v == b) continue;
                    if (on_segment_open(d.coords[v], d.coords[a], d.coords[b])) ok = false;
                }
        }
        if (!ok) continue;
        try {
            complete_drawing(g2, d.coords, drawn);
        } catch (const Error&) {
            continue;  // a region failed to stay star-shaped: widen and retry
        }
        return d;
    }
    fail(Err::Internal, "triangle bridge drawing did not stabilize");
}

// ── Theorem pipelines ───────────────────────────────────────────────

struct EmbedResult {
    Drawing drawing;
    VerificationReport report;
    long substructure_size = 0;  // side path (general) or chain (convex)
    int route = 0;               // 1 Schnyder path, 2 stabber, 3 outer-face fallback
    bool convex_mode = false;
};

namespace embed_detail {

/// Degenerate hosts (n <= 2) and the outer-face fallback for up to three
/// points: the outer triangle itself is placed on the points (correctly
/// oriented) and the interior is filled.
inline Drawing embed_on_outer_face(const PlaneGraph& g, const PointSet& s) {
    int k = static_cast<int>(s.pts.size());
    require(k <= 3, Err::PointSetTooLarge, "outer-face placement carries at most 3 points");
    std::vector<Pt> q(s.pts.begin(), s.pts.end());
    if (q.empty()) q.push_back({Rat(0), Rat(0)});
    if (q.size() == 1) q.push_back({q[0].x + 1, q[0].y});
    if (q.size() == 2) {
        q.push_back({q[0].x - (q[1].y - q[0].y), q[0].y + (q[1].x - q[0].x)});
    }
    require(orient(q[0], q[1], q[2]) != 0, Err::PointSetTooLarge,
            "three collinear points exceed this graph's outer-face capability");
    Drawing d;
    d.coords.assign(g.n, Pt{});
    std::vector<char> drawn(g.n, 0);
    // The stored outer walk runs clockwise in the drawing.
    std::array<int, 3> perm = orient(q[0], q[1], q[2]) < 0 ? std::array<int, 3>{0, 1, 2}
                                                           : std::array<int, 3>{0, 2, 1};
    for (int i = 0; i < 3; ++i) {
        d.coords[g.outer[i]] = q[perm[i]];
        drawn[g.outer[i]] = 1;
    }
    complete_drawing(g, d.coords, drawn);
    d.s_assignment.assign(k, -1);
    for (int i = 0; i < 3; ++i)
        if (perm[i] < k) d.s_assignment[perm[i]] = g.outer[i];
    return d;
}

inline void validate_points(const PointSet& s) {
    require(!s.pts.empty(), Err::BadInput, "empty point set");
    for (size_t i = 0; i < s.pts.size(); ++i)
        for (size_t j = i + 1; j < s.pts.size(); ++j)
            require(!(s.pts[i] == s.pts[j]), Err::BadInput, "coincident points in S");
}

inline Drawing embed_tiny(const PlaneGraph& g, const PointSet& s) {
    int k = static_cast<int>(s.pts.size());
    require(k <= g.n, Err::PointSetTooLarge, "more points than vertices");
    Drawing d;
    d.coords.assign(g.n, Pt{});
    for (int v = 0; v < g.n; ++v) d.coords[v] = {Rat(v), Rat(v == 1 ? 1 : 0)};
    for (int i = 0; i < k; ++i) d.coords[i] = s.pts[i];
    if (g.n == 2 && d.coords[0] == d.coords[1]) d.coords[1] = {d.coords[0].x + 1, d.coords[0].y};
    d.s_assignment.assign(k, -1);
    for (int i = 0; i < k; ++i) d.s_assignment[i] = i;
    return d;
}

inline VerificationReport enforce(const PlaneGraph& host, const Drawing& d, const std::vector<Pt>& pts) {
    auto rep = check_all(host, d, pts);
    if (!rep.pass())
        fail(Err::Internal, "drawing failed verification: " + rep.planarity_witness + rep.embedding_witness +
                                rep.s_witness);
    return rep;
}

}  // namespace embed_detail

/// Theorem 1 pipeline: triangulate, extract an external outerpath, draw the
/// side path on S, bridge back through the separating triangle when the
/// outerpath lives in a pertinent graph, complete, verify.
inline EmbedResult embed_general(const PlaneGraph& g_in, const PointSet& s) {
    embed_detail::validate_points(s);
    int k = static_cast<int>(s.pts.size());
    EmbedResult res;
    res.convex_mode = false;

    if (g_in.n <= 2) {
        res.drawing = embed_detail::embed_tiny(g_in, s);
        res.route = 3;
        res.report = embed_detail::enforce(g_in, res.drawing, s.pts);
        return res;
    }
    PlaneGraph g = triangulate_to_maximal(g_in);
    auto ex = find_external_outerpath(g);
    res.substructure_size = ex.side_path_size;

    if (k > static_cast<int>(ex.op.side_a.size())) {
        if (k <= 3) {
            res.drawing = embed_detail::embed_on_outer_face(g, s);
            res.route = 3;
        } else {
            fail(Err::PointSetTooLarge, "point set exceeds the extracted side path");
        }
    } else if (ex.route == 1) {
        res.drawing = draw_side_path(g, ex.op, s);
        res.route = 1;
    } else {
        // The outerpath lives in the pertinent graph G'. Draw G' on S, then
        // extend through the separating triangle with the bridge lemma.
        Drawing dh = draw_side_path(ex.host, ex.op, s);
        res.route = 2;
        Drawing d;
        d.coords.assign(g.n, Pt{});
        std::vector<char> drawn(g.n, 0);
        for (int hv = 0; hv < ex.host.n; ++hv) {
            d.coords[ex.host2g[hv]] = dh.coords[hv];
            drawn[ex.host2g[hv]] = 1;
        }
        std::array<int, 3> t_g = {ex.host2g[ex.host.outer[0]], ex.host2g[ex.host.outer[1]],
                                  ex.host2g[ex.host.outer[2]]};
        auto inside_t = vertices_inside_cycle(g, {t_g[0], t_g[1], t_g[2]});
        std::vector<char> in_t(g.n, 0);
        for (int v : inside_t) in_t[v] = 1;
        std::vector<int> keep;
        for (int v = 0; v < g.n; ++v)
            if (!in_t[v]) keep.push_back(v);
        auto sf2 = induced_with_faces(g, keep);
        const PlaneGraph& g2 = sf2.h;

        // Paths from the triangle to the roots, via any interior vertex of
        // the pertinent graph inside t.
        auto sr = compute_realizer(g);
        int z = -1;
        for (int v : inside_t) {
            bool on_t = v == t_g[0] || v == t_g[1] || v == t_g[2];
            if (!on_t) {
                z = v;
                break;
            }
        }
        require(z >= 0, Err::Internal, "no interior vertex inside the separating triangle");
        std::array<int, 3> fverts;
        std::array<Pt, 3> tau;
        std::array<std::vector<int>, 3> paths;
        for (int c = 0; c < 3; ++c) {
            auto pc = path_to_root(g, sr, z, c);
            int hit = -1;
            for (size_t i = 0; i < pc.size(); ++i)
                if (pc[i] == t_g[0] || pc[i] == t_g[1] || pc[i] == t_g[2]) {
                    hit = static_cast<int>(i);
                    break;
                }
            require(hit >= 0, Err::Internal, "root path misses the separating triangle");
            std::vector<int> tail(pc.begin() + hit, pc.end());
            fverts[c] = sf2.g2h[tail.front()];
            tau[c] = d.coords[tail.front()];
            for (int& v : tail) v = sf2.g2h[v];
            for (int v : tail) require(v >= 0, Err::Internal, "tail leaves the bridge graph");
            paths[c] = tail;
        }
        Drawing d2 = draw_triangle_bridge(g2, fverts, tau, paths);
        for (int hv = 0; hv < g2.n; ++hv) {
            int gv = sf2.h2g[hv];
            if (!drawn[gv]) {
                d.coords[gv] = d2.coords[hv];
                drawn[gv] = 1;
            }
        }
        // Interiors of the other 4-block children of t remain; one global
        // completion pass fills every hole.
        complete_drawing(g, d.coords, drawn);
        d.s_assignment = dh.s_assignment;
        for (int& v : d.s_assignment) v = ex.host2g[v];
        res.drawing = std::move(d);
    }
    res.report = embed_detail::enforce(g_in, res.drawing, s.pts);
    res.report.bounds = audit_bounds(g.n, false, ex.side_path_size, k);
    return res;
}

/// Theorem 2 pipeline: triangulate, take the best chain's induced
/// biconnected outerplanar subgraph, draw it on the one-sided convex set,
/// complete, verify.
inline EmbedResult embed_convex(const PlaneGraph& g_in, const PointSet& s) {
    embed_detail::validate_points(s);
    require(one_sided_convex_order(s.pts).has_value(), Err::NotOneSidedConvex,
            "points are not in one-sided convex position");
    int k = static_cast<int>(s.pts.size());
    EmbedResult res;
    res.convex_mode = true;

    if (g_in.n <= 2) {
        res.drawing = embed_detail::embed_tiny(g_in, s);
        res.route = 3;
        res.report = embed_detail::enforce(g_in, res.drawing, s.pts);
        return res;
    }
    PlaneGraph g = triangulate_to_maximal(g_in);
    if (g.n == 3) {
        res.drawing = embed_detail::embed_on_outer_face(g, s);
        res.route = 3;
        res.substructure_size = 3;
        res.report = embed_detail::enforce(g_in, res.drawing, s.pts);
        return res;
    }
    auto sr = compute_realizer(g);
    auto chain = best_chain(g, sr);
    res.substructure_size = static_cast<long>(chain.vertices.size());
    require(k <= res.substructure_size, Err::PointSetTooLarge, "point set exceeds the extracted chain");
    auto cs = chain_to_outerplanar(g, sr, chain);
    res.drawing = draw_convex(g, cs, s);
    res.route = 1;
    res.report = embed_detail::enforce(g_in, res.drawing, s.pts);
    res.report.bounds = audit_bounds(g.n, true, res.substructure_size, k);
    return res;
}

}  // namespace pse
