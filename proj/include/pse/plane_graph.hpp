#pragma once

#include "pse/rational.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

namespace pse {

using Edge = std::pair<int, int>;

inline Edge ekey(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

using Triangle = std::array<int, 3>;

inline Triangle tkey(int a, int b, int c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

/// Plane graph: a simple connected planar graph with a fixed combinatorial
/// embedding. rot[v] lists the neighbors of v in counterclockwise order;
/// outer is one traced face walk, designated as the external face. With
/// counterclockwise rotations the traced walk of the external face runs
/// clockwise around the graph when drawn.
struct PlaneGraph {
    int n = 0;
    std::vector<std::vector<int>> rot;
    std::vector<int> outer;
    std::set<Edge> dummies;

    PlaneGraph() = default;
    explicit PlaneGraph(int nv) : n(nv), rot(nv) {}

    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    int edge_count() const {
        int s = 0;
        for (auto& r : rot) s += static_cast<int>(r.size());
        return s / 2;
    }

    bool has_edge(int u, int v) const {
        const auto& a = rot[u].size() <= rot[v].size() ? rot[u] : rot[v];
        int w = rot[u].size() <= rot[v].size() ? v : u;
        return std::find(a.begin(), a.end(), w) != a.end();
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v : rot[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    int index_of(int v, int nbr) const {
        const auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), nbr);
        require(it != r.end(), Err::Internal, "index_of: edge not present");
        return static_cast<int>(it - r.begin());
    }

    /// Next half-edge of the face left of (u -> v): (v -> w) with w the
    /// counterclockwise predecessor of u around v.
    std::pair<int, int> face_next(int u, int v) const {
        const auto& r = rot[v];
        int i = index_of(v, u);
        int w = r[(i + static_cast<int>(r.size()) - 1) % r.size()];
        return {v, w};
    }

    /// The face walk containing half-edge (u -> v), as the sequence of tail
    /// vertices.
    std::vector<int> trace_face(int u, int v) const {
        std::vector<int> walk;
        int a = u, b = v;
        do {
            walk.push_back(a);
            auto [na, nb] = face_next(a, b);
            a = na;
            b = nb;
        } while (!(a == u && b == v));
        return walk;
    }

    /// All face walks (one per half-edge orbit).
    std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> fs;
        std::set<std::pair<int, int>> seen;
        for (int u = 0; u < n; ++u) {
            for (int v : rot[u]) {
                if (seen.count({u, v})) continue;
                auto walk = trace_face(u, v);
                fs.push_back(walk);
                int m = static_cast<int>(walk.size());
                for (int i = 0; i < m; ++i) seen.insert({walk[i], walk[(i + 1) % m]});
            }
        }
        return fs;
    }

    bool connected() const {
        if (n == 0) return true;
        std::vector<int> stack = {0};
        std::vector<char> vis(n, 0);
        vis[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : rot[v])
                if (!vis[w]) {
                    vis[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == n;
    }

    /// Structural invariants: simplicity, symmetric rotations, Euler face
    /// count, and the designated outer face being a traced face.
    void validate() const {
        for (int v = 0; v < n; ++v) {
            std::set<int> seen;
            for (int w : rot[v]) {
                require(w != v, Err::Internal, "self-loop");
                require(w >= 0 && w < n, Err::Internal, "neighbor out of range");
                require(seen.insert(w).second, Err::Internal, "parallel edge");
            }
        }
        for (int v = 0; v < n; ++v)
            for (int w : rot[v]) require(has_edge(w, v), Err::Internal, "asymmetric rotation");
        if (edge_count() == 0) return;
        require(connected(), Err::Internal, "disconnected plane graph");
        int f = static_cast<int>(faces().size());
        require(f == edge_count() - n + 2, Err::InvalidRotation, "rotation system is not planar (Euler check)");
        require(!outer.empty() && is_traced_face(outer), Err::UnknownOuterFace, "outer face is not a traced face");
    }

    bool is_traced_face(const std::vector<int>& walk) const {
        if (walk.size() < 2) return false;
        auto t = trace_face(walk[0], walk[1]);
        if (t.size() != walk.size()) return false;
        return std::equal(t.begin(), t.end(), walk.begin());
    }

    bool is_maximal() const {
        if (n < 3) return false;
        if (edge_count() != 3 * n - 6) return false;
        for (auto& f : faces())
            if (f.size() != 3) return false;
        return true;
    }

    /// Insert edge (a, c) splitting the face that contains consecutive walk
    /// positions ...,a,b,... and ...,c,d,...  (b and d are the walk successors
    /// of the two endpoints). Rotation slots follow the face-corner rule.
    void insert_chord(int a, int b, int c, int d) {
        require(a != c && !has_edge(a, c), Err::Internal, "insert_chord: invalid chord");
        rot[a].insert(rot[a].begin() + index_of(a, b) + 1, c);
        rot[c].insert(rot[c].begin() + index_of(c, d) + 1, a);
    }
};

inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) return a.size() == b.size();
    size_t m = a.size();
    for (size_t s = 0; s < m; ++s) {
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i) ok = a[(s + i) % m] == b[i];
        if (ok) return true;
    }
    return false;
}

/// Smallest rotation of the walk, for deterministic tie-breaking.
inline std::vector<int> canonical_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    for (size_t s = 1; s < w.size(); ++s) {
        std::vector<int> cand(w.size());
        for (size_t i = 0; i < w.size(); ++i) cand[i] = w[(s + i) % w.size()];
        if (cand < best) best = cand;
    }
    return best;
}

// ── Induced subgraphs with face bookkeeping ─────────────────────────

/// Induced subgraph of g on `vs` together with the mapping between its faces
/// and the regions of g they bound. h keeps g's vertex ids (h.n == g.n with
/// untouched vertices isolated is avoided: h uses compact ids, h2g maps back).
struct SubgraphFaces {
    PlaneGraph h;                                // compact ids 0..|vs|-1
    std::vector<int> g2h, h2g;                   // vertex id maps (g2h: -1 when absent)
    std::vector<std::vector<int>> hfaces;        // traced faces of h, in h ids
    int outer_hface = -1;                        // index into hfaces
    std::vector<std::vector<int>> inside;        // per hface: g vertices strictly inside
};

inline SubgraphFaces induced_with_faces(const PlaneGraph& g, const std::vector<int>& vs) {
    SubgraphFaces out;
    out.g2h.assign(g.n, -1);
    out.h2g = vs;
    for (size_t i = 0; i < vs.size(); ++i) {
        require(out.g2h[vs[i]] == -1, Err::Internal, "duplicate vertex in induced set");
        out.g2h[vs[i]] = static_cast<int>(i);
    }
    PlaneGraph& h = out.h;
    h = PlaneGraph(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (int w : g.rot[vs[i]])
            if (out.g2h[w] >= 0) h.rot[i].push_back(out.g2h[w]);
    for (auto& e : g.dummies)
        if (out.g2h[e.first] >= 0 && out.g2h[e.second] >= 0)
            h.dummies.insert(ekey(out.g2h[e.first], out.g2h[e.second]));

    if (h.edge_count() == 0) return out;

    // Region merge: g-faces connected across edges absent from h share an
    // h-face region.
    auto gfaces = g.faces();
    int gf = static_cast<int>(gfaces.size());
    std::map<std::pair<int, int>, int> face_of;  // directed g half-edge -> g face
    for (int f = 0; f < gf; ++f) {
        int m = static_cast<int>(gfaces[f].size());
        for (int i = 0; i < m; ++i) face_of[{gfaces[f][i], gfaces[f][(i + 1) % m]}] = f;
    }
    std::vector<int> comp(gf);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [u, v] : g.edges()) {
        bool inh = out.g2h[u] >= 0 && out.g2h[v] >= 0;
        if (inh) continue;
        int f1 = face_of[{u, v}], f2 = face_of[{v, u}];
        comp[find(f1)] = find(f2);
    }

    out.hfaces = h.faces();
    // Identify each h-face with a merged g region via any of its half-edges.
    std::unordered_map<int, int> region_to_hface;
    for (int hf = 0; hf < static_cast<int>(out.hfaces.size()); ++hf) {
        auto& w = out.hfaces[hf];
        int u = out.h2g[w[0]], v = out.h2g[w[1]];
        region_to_hface[find(face_of[{u, v}])] = hf;
    }
    int gouter_region = find(face_of[{g.outer[0], g.outer[1]}]);
    auto it = region_to_hface.find(gouter_region);
    require(it != region_to_hface.end(), Err::Internal, "outer region lost in induced subgraph");
    out.outer_hface = it->second;
    out.h.outer = out.hfaces[out.outer_hface];

    // Vertices strictly inside each h-face: vertices of g absent from h whose
    // incident faces all map into that region.
    out.inside.assign(out.hfaces.size(), {});
    std::vector<char> done(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (out.g2h[v] >= 0 || done[v] || g.rot[v].empty()) continue;
        int f = find(face_of[{v, g.rot[v][0]}]);
        auto jt = region_to_hface.find(f);
        if (jt != region_to_hface.end()) out.inside[jt->second].push_back(v);
        done[v] = 1;
    }
    return out;
}

inline PlaneGraph induced_subgraph(const PlaneGraph& g, const std::vector<int>& vs) {
    auto sf = induced_with_faces(g, vs);
    return sf.h;
}

// ── Outerpaths ──────────────────────────────────────────────────────

/// Induced outerpath of a host graph: boundary cycle, the two side paths
/// with respect to the extremal edge, and that edge, which lies on the
/// host's external boundary. side_a is the path that later carries the
/// point set.
struct Outerpath {
    std::vector<int> boundary;
    std::vector<int> side_a;
    std::vector<int> side_b;
    std::pair<int, int> extremal;
};

/// Check every Outerpath invariant against the host; returns human-readable
/// violations (empty = certified).
inline std::vector<std::string> certify_outerpath(const PlaneGraph& g, const Outerpath& op) {
    std::vector<std::string> bad;
    auto note = [&bad](const std::string& s) { bad.push_back(s); };
    int m = static_cast<int>(op.boundary.size());
    if (m < 3) return {"boundary cycle too short"};
    {
        std::set<int> uniq(op.boundary.begin(), op.boundary.end());
        if (static_cast<int>(uniq.size()) != m) note("boundary repeats a vertex");
    }
    for (int i = 0; i < m; ++i)
        if (!g.has_edge(op.boundary[i], op.boundary[(i + 1) % m])) note("boundary edge missing in host");

    // Extremal edge on the host's external boundary.
    {
        bool on_outer = false;
        int om = static_cast<int>(g.outer.size());
        for (int i = 0; i < om; ++i) {
            int a = g.outer[i], b = g.outer[(i + 1) % om];
            if (ekey(a, b) == ekey(op.extremal.first, op.extremal.second)) on_outer = true;
        }
        if (!on_outer) note("extremal edge not on host external boundary");
        bool on_cycle = false;
        for (int i = 0; i < m; ++i)
            if (ekey(op.boundary[i], op.boundary[(i + 1) % m]) == ekey(op.extremal.first, op.extremal.second))
                on_cycle = true;
        if (!on_cycle) note("extremal edge not on the boundary cycle");
    }

    // The induced subgraph must be bounded by exactly this cycle
    // (biconnected outerplanar with all vertices external).
    auto sf = induced_with_faces(g, op.boundary);
    std::vector<int> wh;
    for (int v : op.boundary) wh.push_back(sf.g2h[v]);
    std::vector<int> rev(wh.rbegin(), wh.rend());
    if (sf.outer_hface < 0 ||
        !(cyclic_equal(sf.hfaces[sf.outer_hface], wh) || cyclic_equal(sf.hfaces[sf.outer_hface], rev)))
        note("induced subgraph is not bounded by the boundary cycle");

    // Weak dual must be a path.
    if (bad.empty()) {
        int fcount = static_cast<int>(sf.hfaces.size());
        std::map<Edge, std::vector<int>> by_edge;
        for (int f = 0; f < fcount; ++f) {
            if (f == sf.outer_hface) continue;
            int fm = static_cast<int>(sf.hfaces[f].size());
            for (int i = 0; i < fm; ++i)
                by_edge[ekey(sf.hfaces[f][i], sf.hfaces[f][(i + 1) % fm])].push_back(f);
        }
        std::map<int, int> deg;
        int dual_edges = 0;
        for (auto& [e, fs] : by_edge)
            if (fs.size() == 2) {
                ++deg[fs[0]];
                ++deg[fs[1]];
                ++dual_edges;
            }
        int bounded = fcount - 1, ends = 0;
        for (auto& [f, d] : deg)
            if (d > 2) note("weak dual has a vertex of degree > 2");
        if (dual_edges != bounded - 1) note("weak dual is not a tree/path");
        (void)ends;
    }

    // Side paths partition the boundary, are contiguous boundary arcs, and
    // are induced; off-boundary edges join the two sides.
    {
        std::set<int> sa(op.side_a.begin(), op.side_a.end()), sb(op.side_b.begin(), op.side_b.end());
        if (sa.size() != op.side_a.size() || sb.size() != op.side_b.size()) note("side path repeats a vertex");
        if (sa.size() + sb.size() != static_cast<size_t>(m)) note("side paths do not partition the boundary");
        for (int v : op.side_b)
            if (sa.count(v)) note("side paths overlap");
        auto induced_path = [&](const std::vector<int>& p) {
            for (size_t i = 0; i + 1 < p.size(); ++i)
                if (!g.has_edge(p[i], p[i + 1])) return false;
            for (size_t i = 0; i < p.size(); ++i)
                for (size_t j = i + 2; j < p.size(); ++j)
                    if (g.has_edge(p[i], p[j])) return false;
            return true;
        };
        if (!induced_path(op.side_a)) note("side path a is not an induced path");
        if (!induced_path(op.side_b)) note("side path b is not an induced path");
        std::set<Edge> on_cycle;
        for (int i = 0; i < m; ++i) on_cycle.insert(ekey(op.boundary[i], op.boundary[(i + 1) % m]));
        for (auto [u, v] : sf.h.edges()) {
            int gu = sf.h2g[u], gv = sf.h2g[v];
            if (on_cycle.count(ekey(gu, gv))) continue;
            bool across = (sa.count(gu) && sb.count(gv)) || (sb.count(gu) && sa.count(gv));
            if (!across) note("off-boundary edge does not join the two side paths");
        }
    }
    return bad;
}

// ── Construction ────────────────────────────────────────────────────

/// Build a PlaneGraph from an edge list. When a rotation system is supplied
/// it is preserved verbatim (and checked); otherwise a planar embedding is
/// computed. A disconnected input is first connected with dummy bridge
/// edges. Without an explicit outer face, a maximum-size face is chosen.
PlaneGraph from_edge_list(int n, const std::vector<Edge>& edges,
                          const std::optional<std::vector<std::vector<int>>>& rotation = std::nullopt,
                          const std::optional<std::vector<int>>& outer = std::nullopt);

/// All triangles (3-cliques).
inline std::vector<Triangle> all_triangles(const PlaneGraph& g) {
    std::vector<std::set<int>> adj(g.n);
    for (int v = 0; v < g.n; ++v) adj[v] = std::set<int>(g.rot[v].begin(), g.rot[v].end());
    std::vector<Triangle> ts;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.rot[u]) {
            if (v <= u) continue;
            for (int w : g.rot[v])
                if (w > v && adj[u].count(w)) ts.push_back({u, v, w});
        }
    return ts;
}

/// No chord joins two non-consecutive vertices of the external boundary.
inline bool is_internally_3connected(const PlaneGraph& g) {
    const auto& b = g.outer;
    int m = static_cast<int>(b.size());
    std::vector<int> posn(g.n, -1);
    for (int i = 0; i < m; ++i) posn[b[i]] = i;
    for (int i = 0; i < m; ++i) {
        for (int w : g.rot[b[i]]) {
            int j = posn[w];
            if (j < 0) continue;
            int d = std::abs(i - j);
            if (d != 1 && d != m - 1 && d != 0) return false;
        }
    }
    return true;
}

// ── Implementation ──────────────────────────────────────────────────

namespace detail {

/// Triangulate one face of g given by its walk; chords must avoid existing
/// edges, so the ear choice scans for a valid position and falls back to
/// longer chords when needed.
inline void triangulate_face_walk(PlaneGraph& g, std::vector<int> walk) {
    while (walk.size() > 3) {
        int m = static_cast<int>(walk.size());
        int pos = -1;
        for (int i = 0; i < m; ++i) {
            int a = walk[i], c = walk[(i + 2) % m];
            if (a != c && !g.has_edge(a, c)) {
                pos = i;
                break;
            }
        }
        if (pos >= 0) {
            int a = walk[pos], b = walk[(pos + 1) % m], c = walk[(pos + 2) % m], d = walk[(pos + 3) % m];
            g.insert_chord(a, b, c, d);
            g.dummies.insert(ekey(a, c));
            walk.erase(walk.begin() + (pos + 1) % m);
            continue;
        }
        // General chord: split the walk and recurse on both parts.
        bool found = false;
        for (int i = 0; i < m && !found; ++i) {
            for (int j = i + 2; j < m && !found; ++j) {
                if (i == 0 && j == m - 1) continue;
                int a = walk[i], c = walk[j];
                if (a == c || g.has_edge(a, c)) continue;
                g.insert_chord(a, walk[(i + 1) % m], c, walk[(j + 1) % m]);
                g.dummies.insert(ekey(a, c));
                std::vector<int> left(walk.begin() + i, walk.begin() + j + 1);
                std::vector<int> right;
                for (int k = j; k != i; k = (k + 1) % m) right.push_back(walk[k]);
                right.push_back(walk[i]);
                triangulate_face_walk(g, left);
                triangulate_face_walk(g, right);
                found = true;
            }
        }
        require(found, Err::Internal, "triangulation stalled on a face walk");
        return;
    }
}

}  // namespace detail

inline PlaneGraph triangulate_to_maximal(const PlaneGraph& g) {
    require(g.n >= 3, Err::TooSmall, "triangulate_to_maximal needs n >= 3");
    PlaneGraph t = g;
    std::pair<int, int> outer_edge = {t.outer[0], t.outer[1]};
    bool again = true;
    while (again) {
        again = false;
        for (auto& f : t.faces()) {
            if (f.size() > 3) {
                detail::triangulate_face_walk(t, f);
                again = true;
                break;
            }
        }
    }
    t.outer = t.trace_face(outer_edge.first, outer_edge.second);
    require(t.is_maximal(), Err::Internal, "triangulation did not reach a maximal plane graph");
    t.validate();
    return t;
}

inline std::vector<Triangle> separating_triangles(const PlaneGraph& g) {
    require(g.is_maximal(), Err::NotMaximal, "separating_triangles needs a maximal plane graph");
    std::set<Triangle> face_tris;
    for (auto& f : g.faces()) face_tris.insert(tkey(f[0], f[1], f[2]));
    std::vector<Triangle> sep;
    for (auto& t : all_triangles(g))
        if (!face_tris.count(t)) sep.push_back(t);
    return sep;
}

}  // namespace pse

// from_edge_list lives apart to contain the Boost.Graph include.
#include "pse/plane_graph_embed.hpp"
