#pragma once

#include "pse/fourblock.hpp"
#include "pse/generators.hpp"

#include <numeric>

namespace pse {

/// Rectangular representation of the dual of a 4-connected maximal plane
/// graph g with outer triangle (u,w,v) and face (w,v,w'): every vertex but w
/// gets an axis-aligned integer rectangle; the rectangles tile a box, two of
/// them share a positive-length border iff their vertices are adjacent, and
/// w plays the unbounded face: its neighbors are exactly the rectangles on
/// the box boundary, with v spanning the bottom, u the left side above v,
/// and w' the right side above v.
struct RectLayout {
    struct Box {
        long x1 = 0, y1 = 0, x2 = 0, y2 = 0;
        long width() const { return x2 - x1; }
        long height() const { return y2 - y1; }
        long area() const { return width() * height(); }
    };
    int u = -1, v = -1, w = -1, wp = -1;
    long width = 0, height = 0;
    std::vector<Box> rect;       // indexed by g vertex id
    std::vector<char> has_rect;  // false only for w
};

/// Check every RectLayout invariant: positive areas, exact tiling, contact
/// graph equal to g minus w, and the boundary contract.
inline std::vector<std::string> verify_rect_layout(const PlaneGraph& g, const RectLayout& lay) {
    std::vector<std::string> bad;
    auto note = [&bad](const std::string& s) {
        if (bad.size() < 16) bad.push_back(s);
    };
    long W = lay.width, H = lay.height;
    if (W <= 0 || H <= 0) return {"degenerate bounding box"};
    long area = 0;
    for (int z = 0; z < g.n; ++z) {
        if (!lay.has_rect[z]) continue;
        const auto& r = lay.rect[z];
        if (r.width() <= 0 || r.height() <= 0) note("empty rectangle");
        if (r.x1 < 0 || r.y1 < 0 || r.x2 > W || r.y2 > H) note("rectangle outside the box");
        area += r.area();
    }
    if (area != W * H) note("rectangle areas do not tile the box");
    for (int a = 0; a < g.n; ++a) {
        if (!lay.has_rect[a]) continue;
        for (int b = a + 1; b < g.n; ++b) {
            if (!lay.has_rect[b]) continue;
            const auto& ra = lay.rect[a];
            const auto& rb = lay.rect[b];
            long ox = std::min(ra.x2, rb.x2) - std::max(ra.x1, rb.x1);
            long oy = std::min(ra.y2, rb.y2) - std::max(ra.y1, rb.y1);
            if (ox > 0 && oy > 0) note("rectangles overlap");
            bool contact = (ox == 0 && oy > 0) || (oy == 0 && ox > 0);
            if (contact != g.has_edge(a, b))
                note("contact/adjacency mismatch at " + std::to_string(a) + "," + std::to_string(b));
        }
    }
    const auto& rv = lay.rect[lay.v];
    if (!(rv.x1 == 0 && rv.x2 == W && rv.y1 == 0)) note("v does not span the bottom side");
    const auto& ru = lay.rect[lay.u];
    if (!(ru.x1 == 0 && ru.y1 == rv.y2 && ru.y2 == H)) note("u does not span the left side above v");
    const auto& rw = lay.rect[lay.wp];
    if (!(rw.x2 == W && rw.y1 == rv.y2 && rw.y2 == H)) note("w' does not span the right side above v");
    std::set<int> link(g.rot[lay.w].begin(), g.rot[lay.w].end());
    for (int z = 0; z < g.n; ++z) {
        if (!lay.has_rect[z]) continue;
        const auto& r = lay.rect[z];
        bool on_boundary = r.x1 == 0 || r.x2 == W || r.y1 == 0 || r.y2 == H;
        if (on_boundary != (link.count(z) > 0)) note("box boundary contact differs from adjacency to w");
        bool top = r.y2 == H;
        bool want_top = link.count(z) && z != lay.v;
        if (top != want_top) note("top-side touchers differ from neighbors of w minus v");
    }
    return bad;
}

namespace rel_detail {

/// Regular edge labeling on the quadrangle graph: interior edges split into
/// T1 (oriented south->north) and T2 (west->east).
struct Rel {
    std::vector<std::vector<int>> t1_out, t1_in, t2_out, t2_in;
};

struct OrderData {
    std::vector<int> order;                 // forward; order[0]=west, order[1]=east, order[2]=south
    std::vector<int> wl, wr;                // run ends per vertex (west side / east side)
    std::vector<std::vector<int>> middles;  // covered run per vertex
    std::vector<int> cover;                 // cover[m] = z with m among middles[z]
};

/// Canonical shelling of the augmented maximal graph xh, peeling vn first
/// and holding vs back until only the base triangle remains. Candidate ties
/// break by a seeded priority so the retry loop sees fresh orderings.
inline bool shelling_order(const PlaneGraph& xh, int vn, int vs, const std::vector<int>& prio, OrderData& od) {
    int n = xh.n;
    int r1 = xh.outer[2], r2 = xh.outer[1];
    std::vector<char> alive(n, 1), on_cycle(n, 0), in_batch(n, 0);
    std::vector<int> nxt(n, -1), prv(n, -1), chords(n, 0);
    for (int i = 0; i < 3; ++i) {
        int a = xh.outer[i], b = xh.outer[(i + 1) % 3];
        nxt[a] = b;
        prv[b] = a;
        on_cycle[a] = 1;
    }
    auto cmp = [&prio](int a, int b) { return prio[a] < prio[b]; };
    std::set<int, decltype(cmp)> cand(cmp);
    cand.insert(vn);
    od.wl.assign(n, -1);
    od.wr.assign(n, -1);
    od.middles.assign(n, {});
    od.cover.assign(n, -1);

    std::vector<int> peel;
    int alive_count = n;
    for (int step = 0; step < n - 2; ++step) {
        int v = -1;
        for (int c : cand) {
            if (c == vs && alive_count > 3) continue;
            v = c;
            break;
        }
        if (v < 0) return false;
        cand.erase(v);
        alive[v] = 0;
        on_cycle[v] = 0;
        --alive_count;
        peel.push_back(v);
        int left = prv[v], right = nxt[v];
        od.wl[v] = left;
        od.wr[v] = right;
        std::vector<int> chain;
        {
            const auto& r = xh.rot[v];
            int deg = static_cast<int>(r.size());
            int start = xh.index_of(v, left);
            for (int s = 1; s < deg; ++s) {
                int w = r[(start + s) % deg];
                if (w == right) break;
                if (alive[w]) chain.push_back(w);
            }
        }
        od.middles[v] = chain;
        for (int m : chain) od.cover[m] = v;

        if (chain.empty()) {
            bool was_triangle = (nxt[right] == left);
            if (!was_triangle && xh.has_edge(left, right)) {
                if (--chords[left] == 0 && left != r1 && left != r2) cand.insert(left);
                if (--chords[right] == 0 && right != r1 && right != r2) cand.insert(right);
            }
            nxt[left] = right;
            prv[right] = left;
        } else {
            int prev = left;
            for (int w : chain) {
                nxt[prev] = w;
                prv[w] = prev;
                on_cycle[w] = 1;
                in_batch[w] = 1;
                prev = w;
            }
            nxt[prev] = right;
            prv[right] = prev;
            for (int w : chain)
                for (int z : xh.rot[w]) {
                    if (!alive[z] || !on_cycle[z]) continue;
                    if (z == nxt[w] || z == prv[w] || z == w) continue;
                    ++chords[w];
                    if (!in_batch[z]) ++chords[z];
                }
            for (int w : chain) {
                in_batch[w] = 0;
                if (chords[w] == 0 && w != r1 && w != r2) cand.insert(w);
            }
            for (int w : chain)
                for (int z : xh.rot[w])
                    if (alive[z] && on_cycle[z] && chords[z] > 0) cand.erase(z);
        }
    }
    od.order.resize(n);
    od.order[0] = r1;
    od.order[1] = r2;
    for (int i = 0; i < n - 2; ++i) od.order[n - 1 - i] = peel[i];
    return od.order[2] == vs;
}

/// Color the interior edges of x from the shelling replay. Middles always
/// take T1 from below; run ends default to T2 but poles force their side,
/// and an ear (no middles) must turn one end into a south contact, which is
/// only block-consistent when that end is covered together with z. Returns
/// false when no rule fits (caller retries with another ordering).
inline bool color_edges(const PlaneGraph& x, int vW, int vE, int vS, int vN, const OrderData& od, Rel& rel) {
    int n = x.n;
    rel.t1_out.assign(n, {});
    rel.t1_in.assign(n, {});
    rel.t2_out.assign(n, {});
    rel.t2_in.assign(n, {});
    auto t1 = [&rel](int tail, int head) {
        rel.t1_out[tail].push_back(head);
        rel.t1_in[head].push_back(tail);
    };
    auto t2 = [&rel](int tail, int head) {
        rel.t2_out[tail].push_back(head);
        rel.t2_in[head].push_back(tail);
    };
    std::vector<char> has_east(n, 0), has_west(n, 0);
    for (int i = 3; i < n; ++i) {
        has_east[od.wl[od.order[i]]] = 1;
        has_west[od.wr[od.order[i]]] = 1;
    }
    for (int i = 3; i < n; ++i) {
        int z = od.order[i];
        int L = od.wl[z], R = od.wr[z];
        const auto& M = od.middles[z];
        for (int m : M) t1(m, z);
        if (z == vN) continue;  // run ends are the uncolored outer edges

        auto feasible = [&](bool lt1, bool rt1) {
            if (L == vS && !lt1) return false;
            if (L == vW && lt1) return false;
            if (R == vS && !rt1) return false;
            if (R == vE && rt1) return false;
            bool in_t1 = lt1 || rt1 || !M.empty();
            bool in_t2 = !lt1 || has_west[z];
            bool out_t2 = !rt1 || has_east[z];
            if (!(in_t1 && in_t2 && out_t2)) return false;
            if (lt1 && L != vS && od.cover[L] != od.cover[z]) return false;
            if (rt1 && R != vS && od.cover[R] != od.cover[z]) return false;
            return true;
        };
        static const std::pair<bool, bool> options[4] = {
            {false, false}, {false, true}, {true, false}, {true, true}};
        int chosen = -1;
        for (int o = 0; o < 4 && chosen < 0; ++o)
            if (feasible(options[o].first, options[o].second)) chosen = o;
        if (chosen < 0) return false;
        auto [left_t1, right_t1] = options[chosen];
        if (left_t1) t1(L, z);
        else t2(L, z);
        if (right_t1) t1(R, z);  // south contact: R sits below z
        else t2(z, R);
    }
    return true;
}

/// Verify the labeling block pattern around every vertex of x:
/// counterclockwise [T1-out][T2-in][T1-in][T2-out] with all four blocks
/// nonempty at interior vertices, a single block at each pole, and exactly
/// the outer edges unlabeled. `mirrored` flips the scan direction; one
/// orientation must fit all vertices.
inline bool check_blocks(const PlaneGraph& x, int vW, int vE, int vS, int vN, const Rel& rel, bool mirrored) {
    auto label = [&](int a, int b) -> int {
        // 0 t1-out, 1 t2-in, 2 t1-in, 3 t2-out, 4 unlabeled
        for (int h : rel.t1_out[a])
            if (h == b) return 0;
        for (int h : rel.t2_in[a])
            if (h == b) return 1;
        for (int h : rel.t1_in[a])
            if (h == b) return 2;
        for (int h : rel.t2_out[a])
            if (h == b) return 3;
        return 4;
    };
    for (int a = 0; a < x.n; ++a) {
        std::vector<int> lab;
        for (int b : x.rot[a]) lab.push_back(label(a, b));
        if (mirrored) std::reverse(lab.begin(), lab.end());
        int deg = static_cast<int>(lab.size());
        bool pole = (a == vW || a == vE || a == vS || a == vN);
        if (pole) {
            int want = a == vS ? 0 : a == vN ? 2 : a == vW ? 3 : 1;
            int outer_count = 0, labeled = 0;
            for (int l : lab) {
                if (l == 4) ++outer_count;
                else if (l == want) ++labeled;
                else return false;
            }
            if (outer_count != 2 || labeled < 1) return false;
            continue;
        }
        int start = -1;
        for (int i = 0; i < deg; ++i)
            if (lab[i] == 0 && lab[(i + deg - 1) % deg] != 0) start = i;
        if (start < 0) return false;
        int expect = 0, count[4] = {0, 0, 0, 0};
        for (int s = 0; s < deg; ++s) {
            int l = lab[(start + s) % deg];
            if (l == 4) return false;
            if (l == expect) ++count[l];
            else if (l == expect + 1) {
                expect = l;
                ++count[l];
            } else
                return false;
        }
        for (int c = 0; c < 4; ++c)
            if (count[c] == 0) return false;
    }
    return true;
}

struct Ports {
    std::vector<int> uf;
    explicit Ports(int n) : uf(2 * n) { std::iota(uf.begin(), uf.end(), 0); }
    int find(int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); }
    void unite(int a, int b) { uf[find(a)] = find(b); }
};

/// Longest-path coordinates over the segment-class DAG: one class per
/// maximal segment, one unit-length arc per rectangle span. Returns false on
/// a cyclic class graph or a source class that is not at coordinate 0.
inline bool class_coords(Ports& ports, int n, int skip_vertex, int source_port, std::vector<long>& out) {
    std::map<int, int> cls;
    for (int p = 0; p < 2 * n; ++p) {
        int c = ports.find(p);
        if (!cls.count(c)) {
            int id = static_cast<int>(cls.size());
            cls[c] = id;
        }
    }
    int K = static_cast<int>(cls.size());
    std::vector<std::vector<int>> adj(K);
    std::vector<int> indeg(K, 0);
    for (int z = 0; z < n; ++z) {
        if (z == skip_vertex) continue;
        int a = cls[ports.find(2 * z)], b = cls[ports.find(2 * z + 1)];
        adj[a].push_back(b);
        ++indeg[b];
    }
    std::vector<long> dist(K, 0);
    std::deque<int> q;
    for (int k = 0; k < K; ++k)
        if (indeg[k] == 0) q.push_back(k);
    int seen = 0;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        ++seen;
        for (int b : adj[a]) {
            dist[b] = std::max(dist[b], dist[a] + 1);
            if (--indeg[b] == 0) q.push_back(b);
        }
    }
    if (seen != K) return false;
    out.assign(2 * n, 0);
    for (int p = 0; p < 2 * n; ++p) out[p] = dist[cls[ports.find(p)]];
    return out[source_port] == 0;
}

}  // namespace rel_detail

inline RectLayout rectangular_representation(const PlaneGraph& g, int u, int v, int w, int wp) {
    require(g.is_maximal() && g.n >= 6, Err::Not4Connected,
            "rectangular representation needs a 4-connected maximal plane graph (n >= 6)");
    require(separating_triangles(g).empty(), Err::Not4Connected, "graph has a separating triangle");
    {
        std::set<int> outer_set(g.outer.begin(), g.outer.end());
        require(outer_set == std::set<int>({u, v, w}), Err::BadDesignation, "(u,w,v) must be the outer triangle");
        auto f1 = g.trace_face(v, w);
        if (cyclic_equal(f1, g.outer)) f1 = g.trace_face(w, v);
        int third = -1;
        for (int z : f1)
            if (z != v && z != w) third = z;
        require(f1.size() == 3 && third == wp, Err::BadDesignation, "(w,v,w') must be an internal face");
    }

    // X: drop edge (w,v); the outer face becomes the quadrangle u,w,w',v.
    PlaneGraph x = g;
    x.rot[w].erase(x.rot[w].begin() + x.index_of(w, v));
    x.rot[v].erase(x.rot[v].begin() + x.index_of(v, w));
    {
        int a = -1, b = -1;
        for (int i = 0; i < 3; ++i) {
            int p = g.outer[i], q = g.outer[(i + 1) % 3];
            if (ekey(p, q) == ekey(u, v)) {
                a = p;
                b = q;
            }
        }
        require(a >= 0, Err::Internal, "outer walk lost edge (u,v)");
        x.outer = x.trace_face(a, b);
        require(x.outer.size() == 4, Err::Internal, "removing (w,v) did not make a quadrangle");
    }
    int vN = w, vS = v, vW = u, vE = wp;

    for (int attempt = 0; attempt < 64; ++attempt) {
        // Augment with the diagonal (vW, vE): a maximal plane graph whose
        // outer triangle contains vN.
        PlaneGraph xh = x;
        {
            int iw = -1, ie = -1;
            for (int i = 0; i < 4; ++i) {
                if (xh.outer[i] == vW) iw = i;
                if (xh.outer[i] == vE) ie = i;
            }
            require(iw >= 0 && ie >= 0 && (iw + 2) % 4 == ie, Err::Internal, "poles not opposite on the quadrangle");
            xh.insert_chord(vW, xh.outer[(iw + 1) % 4], vE, xh.outer[(ie + 1) % 4]);
            auto t = xh.trace_face(vW, vE);
            if (std::find(t.begin(), t.end(), vN) == t.end()) t = xh.trace_face(vE, vW);
            require(std::find(t.begin(), t.end(), vN) != t.end(), Err::Internal, "lost the north pole");
            xh.outer = t;
            while (xh.outer[0] != vN) std::rotate(xh.outer.begin(), xh.outer.begin() + 1, xh.outer.end());
        }
        require(xh.is_maximal(), Err::Internal, "augmented graph is not maximal");

        std::vector<int> prio(x.n);
        std::iota(prio.begin(), prio.end(), 0);
        if (attempt > 0) {
            Rng rng(0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(attempt));
            for (int i = x.n - 1; i > 0; --i) std::swap(prio[i], prio[rng.below(i + 1)]);
        }

        rel_detail::OrderData od;
        if (!rel_detail::shelling_order(xh, vN, vS, prio, od)) continue;
        int oW = od.order[0], oE = od.order[1];

        rel_detail::Rel rel;
        if (!rel_detail::color_edges(x, oW, oE, vS, vN, od, rel)) continue;
        if (!rel_detail::check_blocks(x, oW, oE, vS, vN, rel, false) &&
            !rel_detail::check_blocks(x, oW, oE, vS, vN, rel, true))
            continue;

        // Maximal segments as port classes, then longest-path coordinates.
        rel_detail::Ports vert(x.n), horz(x.n);
        auto Lp = [](int z) { return 2 * z; };
        auto Rp = [](int z) { return 2 * z + 1; };
        for (int a = 0; a < x.n; ++a)
            for (int b : rel.t2_out[a]) vert.unite(Rp(a), Lp(b));
        for (int a = 0; a < x.n; ++a)
            for (int b : rel.t1_out[a]) horz.unite(Rp(a), Lp(b));
        vert.unite(Lp(vS), Lp(oW));
        vert.unite(Rp(vS), Rp(oE));
        horz.unite(Lp(oW), Rp(vS));
        horz.unite(Lp(oE), Rp(vS));
        horz.unite(Rp(oW), Lp(vN));
        horz.unite(Rp(oE), Lp(vN));

        std::vector<long> xs, ys;
        if (!rel_detail::class_coords(vert, x.n, vN, Lp(vS), xs)) continue;
        if (!rel_detail::class_coords(horz, x.n, vN, Lp(vS), ys)) continue;

        RectLayout lay;
        lay.u = u;
        lay.v = v;
        lay.w = w;
        lay.wp = wp;
        lay.rect.assign(g.n, {});
        lay.has_rect.assign(g.n, 0);
        long W = 0, H = 0;
        for (int z = 0; z < g.n; ++z) {
            if (z == vN) continue;
            lay.has_rect[z] = 1;
            lay.rect[z] = {xs[Lp(z)], ys[Lp(z)], xs[Rp(z)], ys[Rp(z)]};
            W = std::max(W, lay.rect[z].x2);
            H = std::max(H, lay.rect[z].y2);
        }
        lay.width = W;
        lay.height = H;
        if (lay.rect[u].x1 != 0) {
            // The shelling may have put the west pole on w'; mirror back.
            for (int z = 0; z < g.n; ++z)
                if (lay.has_rect[z]) {
                    auto& r = lay.rect[z];
                    long nx1 = W - r.x2, nx2 = W - r.x1;
                    r.x1 = nx1;
                    r.x2 = nx2;
                }
        }
        if (!verify_rect_layout(g, lay).empty()) continue;
        return lay;
    }
    fail(Err::Internal, "rectangular representation did not converge");
}

}  // namespace pse
