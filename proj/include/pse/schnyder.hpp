#pragma once

#include "pse/plane_graph.hpp"

#include <deque>
#include <queue>
#include <string>

namespace pse {

// ── Canonical ordering ──────────────────────────────────────────────

struct CanonicalOrder {
    std::vector<int> order;  // order[0]=r1, order[1]=r2, ..., order[n-1]=r0
    int r0 = -1, r1 = -1, r2 = -1;
    // Per vertex (by peel record): leftmost / rightmost down-neighbor and the
    // covered middle run, in left-to-right horizon order.
    std::vector<int> wl, wr;
    std::vector<std::vector<int>> middles;
};

/// Shelling order of a maximal plane graph: repeatedly remove a chord-free
/// vertex of the current boundary cycle, never touching the two base roots.
inline CanonicalOrder canonical_order(const PlaneGraph& g) {
    require(g.is_maximal(), Err::NotMaximal, "canonical order needs a maximal plane graph");
    int n = g.n;
    CanonicalOrder co;
    co.r0 = g.outer[0];
    co.r2 = g.outer[1];
    co.r1 = g.outer[2];
    co.wl.assign(n, -1);
    co.wr.assign(n, -1);
    co.middles.assign(n, {});

    std::vector<char> alive(n, 1), on_cycle(n, 0);
    std::vector<int> nxt(n, -1), prv(n, -1), chords(n, 0);
    // Cycle orientation follows the traced outer walk.
    for (int i = 0; i < 3; ++i) {
        int a = g.outer[i], b = g.outer[(i + 1) % 3];
        nxt[a] = b;
        prv[b] = a;
        on_cycle[a] = 1;
    }
    std::set<int> cand;
    cand.insert(co.r0);

    std::vector<int> peel_seq;
    std::vector<char> in_batch(n, 0);
    for (int step = 0; step < n - 2; ++step) {
        require(!cand.empty(), Err::Internal, "canonical order: no removable vertex");
        int v = *cand.begin();
        cand.erase(cand.begin());
        alive[v] = 0;
        on_cycle[v] = 0;
        peel_seq.push_back(v);

        int left = prv[v], right = nxt[v];
        co.wl[v] = left;
        co.wr[v] = right;
        // Alive neighbors of v strictly between prv and nxt in ccw rotation
        // form the newly exposed chain, ordered from the prv side.
        std::vector<int> chain;
        {
            const auto& r = g.rot[v];
            int deg = static_cast<int>(r.size());
            int start = g.index_of(v, left);
            for (int s = 1; s < deg; ++s) {
                int w = r[(start + s) % deg];
                if (w == right) break;
                if (alive[w]) chain.push_back(w);
            }
        }
        co.middles[v] = chain;

        if (chain.empty()) {
            // The prv-nxt edge turns from chord into cycle edge, unless the
            // cycle was a triangle (then it already was one).
            bool was_triangle = (nxt[right] == left);
            if (!was_triangle && g.has_edge(left, right)) {
                if (--chords[left] == 0 && left != co.r1 && left != co.r2) cand.insert(left);
                if (--chords[right] == 0 && right != co.r1 && right != co.r2) cand.insert(right);
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
            for (int w : chain) {
                for (int z : g.rot[w]) {
                    if (!alive[z] || !on_cycle[z]) continue;
                    if (z == nxt[w] || z == prv[w] || z == w) continue;
                    ++chords[w];
                    if (!in_batch[z]) ++chords[z];
                }
            }
            for (int w : chain) {
                in_batch[w] = 0;
                if (chords[w] == 0 && w != co.r1 && w != co.r2) cand.insert(w);
            }
            // Neighbors that newly gained chords may need eviction.
            for (int w : chain)
                for (int z : g.rot[w])
                    if (alive[z] && on_cycle[z] && chords[z] > 0) cand.erase(z);
        }
    }
    co.order.resize(n);
    co.order[0] = co.r1;
    co.order[1] = co.r2;
    for (int i = 0; i < n - 2; ++i) co.order[n - 1 - i] = peel_seq[i];
    return co;
}

// ── Schnyder realizer ───────────────────────────────────────────────

/// Orientation and 3-coloring of the internal edges of a maximal plane
/// graph. parent[v][c] is the head of v's outgoing color-c edge (-1 for
/// roots). Roots r[c] appear counterclockwise on the external boundary in
/// color order.
struct SchnyderRealizer {
    int n = 0;
    std::array<int, 3> r{-1, -1, -1};
    std::vector<std::array<int, 3>> parent;

    bool is_root(int v) const { return v == r[0] || v == r[1] || v == r[2]; }

    /// (color, tail) of internal edge (u,v), or nullopt for outer edges.
    std::optional<std::pair<int, int>> edge_color(int u, int v) const {
        for (int c = 0; c < 3; ++c) {
            if (parent[u][c] == v) return std::make_pair(c, u);
            if (parent[v][c] == u) return std::make_pair(c, v);
        }
        return std::nullopt;
    }
};

inline SchnyderRealizer compute_realizer(const PlaneGraph& g, const CanonicalOrder& co) {
    SchnyderRealizer sr;
    sr.n = g.n;
    sr.r = {co.r0, co.r1, co.r2};
    sr.parent.assign(g.n, {-1, -1, -1});
    auto is_outer_edge = [&](int a, int b) {
        for (int i = 0; i < 3; ++i) {
            int u = g.outer[i], v = g.outer[(i + 1) % 3];
            if ((u == a && v == b) || (u == b && v == a)) return true;
        }
        return false;
    };
    for (int k = 2; k < g.n; ++k) {
        int v = co.order[k];
        if (!is_outer_edge(v, co.wl[v])) sr.parent[v][1] = co.wl[v];
        if (!is_outer_edge(v, co.wr[v])) sr.parent[v][2] = co.wr[v];
        for (int w : co.middles[v]) sr.parent[w][0] = v;
    }
    return sr;
}

inline SchnyderRealizer compute_realizer(const PlaneGraph& g) {
    require(g.is_maximal(), Err::NotMaximal, "realizer needs a maximal plane graph");
    if (g.n == 3) {
        SchnyderRealizer sr;
        sr.n = 3;
        sr.r = {g.outer[0], g.outer[2], g.outer[1]};
        sr.parent.assign(3, {-1, -1, -1});
        return sr;
    }
    return compute_realizer(g, canonical_order(g));
}

/// Full axiom audit; returns human-readable violations (empty = pass).
inline std::vector<std::string> check_realizer_axioms(const PlaneGraph& g, const SchnyderRealizer& sr) {
    std::vector<std::string> bad;
    auto note = [&bad](const std::string& s) {
        if (bad.size() < 32) bad.push_back(s);
    };
    std::vector<char> outer_v(g.n, 0);
    for (int v : g.outer) outer_v[v] = 1;

    // Every internal edge gets exactly one color+orientation.
    for (auto [u, v] : g.edges()) {
        int hits = 0;
        for (int c = 0; c < 3; ++c) {
            if (sr.parent[u][c] == v) ++hits;
            if (sr.parent[v][c] == u) ++hits;
        }
        bool outer_edge = outer_v[u] && outer_v[v];
        if (outer_edge) {
            // The three boundary edges stay uncolored.
            int m = static_cast<int>(g.outer.size());
            bool boundary = false;
            for (int i = 0; i < m; ++i) {
                int a = g.outer[i], b = g.outer[(i + 1) % m];
                if ((a == u && b == v) || (a == v && b == u)) boundary = true;
            }
            if (boundary) {
                if (hits != 0) note("outer edge colored");
                continue;
            }
        }
        if (hits != 1) note("internal edge must have exactly one color/orientation");
    }

    // Internal vertices: one outgoing edge per color, and the circular
    // pattern out0, in2*, out1, in0*, out2, in1*.
    for (int v = 0; v < g.n; ++v) {
        if (outer_v[v]) continue;
        for (int c = 0; c < 3; ++c)
            if (sr.parent[v][c] < 0) note("internal vertex missing outgoing color");
        std::vector<std::pair<int, int>> lab;  // (color, 0=out/1=in)
        bool ok = true;
        for (int w : g.rot[v]) {
            auto ec = sr.edge_color(v, w);
            if (!ec) {
                note("uncolored edge at internal vertex");
                ok = false;
                break;
            }
            lab.emplace_back(ec->first, ec->second == v ? 0 : 1);
        }
        if (!ok) continue;
        int deg = static_cast<int>(lab.size());
        int start = -1;
        for (int i = 0; i < deg; ++i)
            if (lab[i] == std::make_pair(0, 0)) start = i;
        if (start < 0) {
            note("no outgoing color-0 edge in rotation");
            continue;
        }
        // Expected cyclic pattern after out0.
        std::vector<std::pair<int, int>> expect;
        int i = (start + 1) % deg;
        int phase = 0;  // 0: in2*, then out1; 1: in0*, then out2; 2: in1*, then out0(=start)
        const int inc[3] = {2, 0, 1};
        const int outc[3] = {1, 2, 0};
        while (i != start) {
            auto [c, io] = lab[i];
            if (io == 1 && c == inc[phase]) {
                i = (i + 1) % deg;
                continue;
            }
            if (io == 0 && c == outc[phase] && phase < 2) {
                ++phase;
                i = (i + 1) % deg;
                continue;
            }
            note("circular order violated at an internal vertex");
            break;
        }
        if (i == start && phase != 2) note("missing outgoing edge in circular order");
    }

    // Each color class is a tree on internal vertices plus its root, edges
    // oriented towards the root.
    for (int c = 0; c < 3; ++c) {
        for (int v = 0; v < g.n; ++v) {
            if (outer_v[v]) continue;
            int steps = 0, u = v;
            while (u >= 0 && u != sr.r[c] && steps <= g.n) {
                u = sr.parent[u][c];
                ++steps;
            }
            if (u != sr.r[c]) note("color path does not reach its root");
        }
    }

    // Roots counterclockwise in color order on the external boundary (the
    // traced outer walk runs clockwise, so reversed it must read r0,r1,r2).
    {
        std::vector<int> ccw(g.outer.rbegin(), g.outer.rend());
        std::vector<int> want = {sr.r[0], sr.r[1], sr.r[2]};
        if (!cyclic_equal(ccw, want)) note("roots are not in ccw color order");
    }
    return bad;
}

// ── Paths and regions ───────────────────────────────────────────────

inline bool is_internal(const PlaneGraph& g, int v) {
    for (int u : g.outer)
        if (u == v) return false;
    return true;
}

/// P_i(v): the color-i path from v to root r_i, inclusive.
inline std::vector<int> path_to_root(const PlaneGraph& g, const SchnyderRealizer& sr, int v, int color) {
    require(is_internal(g, v), Err::NotInternal, "path_to_root needs an internal vertex");
    std::vector<int> p = {v};
    int u = v;
    while (u != sr.r[color]) {
        u = sr.parent[u][color];
        require(u >= 0, Err::Internal, "broken color path");
        p.push_back(u);
        require(static_cast<int>(p.size()) <= g.n, Err::Internal, "color path cycles");
    }
    return p;
}

/// Face atlas: all faces plus the directed half-edge -> face index map,
/// computed once and shared by the cycle-interior floods.
struct FaceAtlas {
    std::vector<std::vector<int>> faces;
    std::map<std::pair<int, int>, int> face_of;
    int outer_face = -1;

    explicit FaceAtlas(const PlaneGraph& g) {
        faces = g.faces();
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            int fm = static_cast<int>(faces[f].size());
            for (int i = 0; i < fm; ++i) face_of[{faces[f][i], faces[f][(i + 1) % fm]}] = f;
        }
        outer_face = face_of.at({g.outer[0], g.outer[1]});
    }
};

/// Vertices strictly inside the closed walk `cycle` (which must consist of
/// existing edges): faces are flooded from the outer face without crossing
/// cycle edges; everything unreached and off the cycle is inside.
inline std::vector<int> vertices_inside_cycle(const PlaneGraph& g, const FaceAtlas& atlas,
                                              const std::vector<int>& cycle) {
    std::set<Edge> block;
    int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) block.insert(ekey(cycle[i], cycle[(i + 1) % m]));
    const auto& fs = atlas.faces;
    std::vector<char> reach(fs.size(), 0);
    std::deque<int> q;
    reach[atlas.outer_face] = 1;
    q.push_back(atlas.outer_face);
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        int fm = static_cast<int>(fs[f].size());
        for (int i = 0; i < fm; ++i) {
            int a = fs[f][i], b = fs[f][(i + 1) % fm];
            if (block.count(ekey(a, b))) continue;
            int o = atlas.face_of.at({b, a});
            if (!reach[o]) {
                reach[o] = 1;
                q.push_back(o);
            }
        }
    }
    std::vector<char> on_cycle(g.n, 0), inside(g.n, 0);
    for (int v : cycle) on_cycle[v] = 1;
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
        if (!reach[f])
            for (int v : fs[f])
                if (!on_cycle[v]) inside[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (inside[v]) out.push_back(v);
    return out;
}

inline std::vector<int> vertices_inside_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
    return vertices_inside_cycle(g, FaceAtlas(g), cycle);
}

enum class Region { R0, R1, R2, OnP0, OnP1, OnP2, IsV };

/// Classify every vertex relative to the three paths of v.
inline std::vector<Region> regions_of_all(const PlaneGraph& g, const SchnyderRealizer& sr, int v) {
    std::array<std::vector<int>, 3> P;
    for (int c = 0; c < 3; ++c) P[c] = path_to_root(g, sr, v, c);
    std::vector<Region> cls(g.n, Region::IsV);
    std::vector<char> set(g.n, 0);
    set[v] = 1;
    for (int c = 0; c < 3; ++c)
        for (int u : P[c])
            if (!set[u]) {
                cls[u] = c == 0 ? Region::OnP0 : (c == 1 ? Region::OnP1 : Region::OnP2);
                set[u] = 1;
            }
    for (int c = 0; c < 3; ++c) {
        // R_c(v) is bounded by P_{c-1}(v), P_{c+1}(v) and (r_{c-1}, r_{c+1}).
        int cm = (c + 2) % 3, cp = (c + 1) % 3;
        std::vector<int> cyc(P[cm].rbegin(), P[cm].rend());                     // r_{c-1} ... v
        cyc.insert(cyc.end(), P[cp].begin() + 1, P[cp].end());                  // ... r_{c+1}
        for (int u : vertices_inside_cycle(g, cyc)) {
            if (!set[u]) {
                cls[u] = c == 0 ? Region::R0 : (c == 1 ? Region::R1 : Region::R2);
                set[u] = 1;
            }
        }
    }
    for (int u = 0; u < g.n; ++u) require(set[u] || u == v, Err::Internal, "region classification incomplete");
    return cls;
}

inline Region region_of(const PlaneGraph& g, const SchnyderRealizer& sr, int v, int u) {
    return regions_of_all(g, sr, v)[u];
}

// ── Outerpaths from Schnyder paths ──────────────────────────────────

/// H_{ij}: the subgraph induced by P_i(v) and P_j(v) as an outerpath with
/// extremal edge (r_i, r_j); side_a is P_i's side (starting at r_i).
inline Outerpath outerpath_from_two_paths(const PlaneGraph& g, const SchnyderRealizer& sr, int v, int i, int j) {
    require(i != j && i >= 0 && i < 3 && j >= 0 && j < 3, Err::BadInput, "invalid colors");
    auto Pi = path_to_root(g, sr, v, i);
    auto Pj = path_to_root(g, sr, v, j);
    Outerpath op;
    op.side_a.assign(Pi.rbegin(), Pi.rend());               // r_i ... v
    op.side_b.assign(Pj.rbegin(), Pj.rend());                // r_j ... (v's succ)
    op.side_b.pop_back();                                    // drop v
    op.boundary = op.side_a;
    for (auto it = op.side_b.rbegin(); it != op.side_b.rend(); ++it) op.boundary.push_back(*it);
    op.extremal = {sr.r[i], sr.r[j]};
    return op;
}

// ── Order DAGs and chains ───────────────────────────────────────────

/// The directed graph G_i of the partial order ≺_i (order index 1..3): edges
/// of color i reversed, color i+1 kept, plus the three re-oriented outer
/// edges; single source r_i, single sink r_{i+1} (colors mod 3).
struct OrderDag {
    int index = 1;
    int src = -1, snk = -1;
    int n = 0;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    void add_arc(int a, int b) {
        out[a].push_back(b);
        in[b].push_back(a);
    }
};

inline OrderDag build_order_dag(const PlaneGraph& g, const SchnyderRealizer& sr, int index) {
    require(index >= 1 && index <= 3, Err::BadInput, "order index must be 1..3");
    int c = index % 3, cn = (index + 1) % 3, cp = (index + 2) % 3;
    OrderDag d;
    d.index = index;
    d.n = g.n;
    d.out.assign(g.n, {});
    d.in.assign(g.n, {});
    d.src = sr.r[c];
    d.snk = sr.r[cn];
    for (int v = 0; v < g.n; ++v) {
        if (sr.parent[v][c] >= 0) d.add_arc(sr.parent[v][c], v);  // color i reversed
        if (sr.parent[v][cn] >= 0) d.add_arc(v, sr.parent[v][cn]);
    }
    d.add_arc(sr.r[c], sr.r[cn]);
    d.add_arc(sr.r[c], sr.r[cp]);
    d.add_arc(sr.r[cp], sr.r[cn]);
    return d;
}

inline std::vector<int> topological_order(const OrderDag& d) {
    std::vector<int> indeg(d.n, 0), order;
    for (int v = 0; v < d.n; ++v)
        for (int w : d.out[v]) ++indeg[w];
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    for (int v = 0; v < d.n; ++v)
        if (indeg[v] == 0) q.push(v);
    while (!q.empty()) {
        int v = q.top();
        q.pop();
        order.push_back(v);
        for (int w : d.out[v])
            if (--indeg[w] == 0) q.push(w);
    }
    require(static_cast<int>(order.size()) == d.n, Err::Internal, "order dag has a cycle");
    return order;
}

struct Chain {
    int dag_index = 1;
    std::vector<int> vertices;
};

/// Maximum-vertex directed path; ties resolved to the lexicographically
/// smallest vertex sequence. Maximal chains run from the source to the sink.
inline Chain longest_chain(const OrderDag& d) {
    auto topo = topological_order(d);
    std::vector<int> dist(d.n, 1);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        for (int w : d.out[v]) dist[v] = std::max(dist[v], 1 + dist[w]);
    }
    Chain ch;
    ch.dag_index = d.index;
    int cur = d.src;
    ch.vertices.push_back(cur);
    while (cur != d.snk) {
        int best = -1;
        for (int w : d.out[cur])
            if (dist[w] == dist[cur] - 1 && (best < 0 || w < best)) best = w;
        require(best >= 0, Err::Internal, "longest chain walk failed");
        ch.vertices.push_back(best);
        cur = best;
    }
    return ch;
}

inline Chain best_chain(const PlaneGraph& g, const SchnyderRealizer& sr) {
    Chain best;
    for (int i = 1; i <= 3; ++i) {
        Chain c = longest_chain(build_order_dag(g, sr, i));
        if (c.vertices.size() > best.vertices.size()) best = c;
    }
    return best;
}

inline Chain best_chain(const PlaneGraph& g) {
    require(g.is_maximal() && g.n >= 4, Err::NotMaximal, "best_chain needs a maximal plane graph, n >= 4");
    return best_chain(g, compute_realizer(g));
}

/// Induced subgraph of a maximal chain: certified biconnected outerplanar,
/// with the closing edge (r_i, r_{i+1}) on the host's external boundary.
struct ChainSubgraph {
    SubgraphFaces sf;
    std::vector<int> boundary;      // host ids: chain path then back along (snk, src)
    std::pair<int, int> extremal;   // (src, snk)
};

inline ChainSubgraph chain_to_outerplanar(const PlaneGraph& g, const SchnyderRealizer& sr, const Chain& c) {
    int ci = c.dag_index % 3, cn = (c.dag_index + 1) % 3;
    require(!c.vertices.empty() && c.vertices.front() == sr.r[ci] && c.vertices.back() == sr.r[cn],
            Err::ChainNotMaximal, "chain must run from r_i to r_{i+1}");
    ChainSubgraph cs;
    cs.sf = induced_with_faces(g, c.vertices);
    cs.boundary = c.vertices;
    cs.extremal = {sr.r[ci], sr.r[cn]};
    // The boundary cycle (chain + closing edge) must be the outer face of the
    // induced subgraph; that certifies biconnected outerplanarity.
    std::vector<int> wh;
    for (int v : cs.boundary) wh.push_back(cs.sf.g2h[v]);
    auto outer_walk = cs.sf.hfaces[cs.sf.outer_hface];
    std::vector<int> rev(wh.rbegin(), wh.rend());
    require(cyclic_equal(outer_walk, wh) || cyclic_equal(outer_walk, rev), Err::Internal,
            "chain subgraph is not bounded by the chain cycle");
    return cs;
}

// ── Comparability audit ─────────────────────────────────────────────

struct AuditReport {
    int pairs_checked = 0;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Exhaustive check of the three comparability lemmas on all internal pairs.
inline AuditReport comparability_audit(const PlaneGraph& g, int cap = 60) {
    require(g.n <= cap, Err::AuditCapExceeded, "comparability audit capped");
    auto sr = compute_realizer(g);
    AuditReport rep;
    std::array<OrderDag, 3> dags = {build_order_dag(g, sr, 1), build_order_dag(g, sr, 2),
                                    build_order_dag(g, sr, 3)};
    // reach[i][u] = set of vertices reachable from u in dag i.
    std::array<std::vector<std::vector<char>>, 3> reach;
    for (int i = 0; i < 3; ++i) {
        reach[i].assign(g.n, std::vector<char>(g.n, 0));
        for (int u = 0; u < g.n; ++u) {
            std::deque<int> q = {u};
            reach[i][u][u] = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int w : dags[i].out[x])
                    if (!reach[i][u][w]) {
                        reach[i][u][w] = 1;
                        q.push_back(w);
                    }
            }
        }
    }
    std::vector<int> internals;
    for (int v = 0; v < g.n; ++v)
        if (is_internal(g, v)) internals.push_back(v);
    std::vector<std::vector<Region>> cls(g.n);
    for (int v : internals) cls[v] = regions_of_all(g, sr, v);

    auto comparable = [&](int i, int u, int v) { return reach[i][u][v] || reach[i][v][u]; };
    for (int u : internals)
        for (int v : internals) {
            if (u >= v) continue;
            ++rep.pairs_checked;
            bool any = comparable(0, u, v) || comparable(1, u, v) || comparable(2, u, v);
            if (!any)
                rep.violations.push_back("incomparable pair " + std::to_string(u) + "," + std::to_string(v));
            for (int idx = 1; idx <= 3; ++idx) {
                int c = idx % 3, cn = (idx + 1) % 3, cp = (idx + 2) % 3;
                Region rcp = cp == 0 ? Region::R0 : (cp == 1 ? Region::R1 : Region::R2);
                if (cls[u][v] == rcp && comparable(idx - 1, u, v))
                    rep.violations.push_back("lemma-2 violation at pair " + std::to_string(u) + "," +
                                             std::to_string(v) + " order " + std::to_string(idx));
                // Lemma 3 placements for comparable pairs.
                auto in_set = [&](Region rr, int color_r, int color_p) {
                    return rr == (color_r == 0 ? Region::R0 : color_r == 1 ? Region::R1 : Region::R2) ||
                           rr == (color_p == 0 ? Region::OnP0 : color_p == 1 ? Region::OnP1 : Region::OnP2);
                };
                if (reach[idx - 1][v][u] && v != u) {  // v ≺ u
                    if (!in_set(cls[u][v], cn, c))
                        rep.violations.push_back("lemma-3 (v<u) violation pair " + std::to_string(u) + "," +
                                                 std::to_string(v) + " order " + std::to_string(idx));
                }
                if (reach[idx - 1][u][v]) {  // u ≺ v
                    if (!in_set(cls[u][v], c, cn))
                        rep.violations.push_back("lemma-3 (u<v) violation pair " + std::to_string(u) + "," +
                                                 std::to_string(v) + " order " + std::to_string(idx));
                }
            }
        }
    return rep;
}

}  // namespace pse
