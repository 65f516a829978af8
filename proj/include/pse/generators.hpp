#pragma once

#include "pse/drawing_types.hpp"
#include "pse/plane_graph.hpp"

#include <random>

namespace pse {

/// All randomness flows through mt19937_64 so runs are byte-identical for a
/// given seed on every platform.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t next() { return gen(); }
    int below(int m) { return m <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(m)); }
};

/// K4 with outer face (0,2,1) and internal vertex 3.
inline PlaneGraph k4() {
    PlaneGraph g(4);
    g.rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}};
    g.outer = {0, 2, 1};
    return g;
}

/// Insert a new vertex inside the internal face with walk f, joined to every
/// face vertex. Returns the new vertex id.
inline int insert_vertex_in_face(PlaneGraph& g, const std::vector<int>& f) {
    int v = g.n++;
    g.rot.push_back(f);
    int m = static_cast<int>(f.size());
    for (int i = 0; i < m; ++i) {
        int a = f[i], b = f[(i + 1) % m];
        g.rot[a].insert(g.rot[a].begin() + g.index_of(a, b) + 1, v);
    }
    return v;
}

/// Flip the internal edge (a,b) shared by triangles (a,b,c) and (b,a,d) to
/// the edge (c,d). Returns false (graph untouched) when the flip is invalid.
inline bool flip_edge(PlaneGraph& g, int a, int b) {
    if (!g.has_edge(a, b)) return false;
    int m = static_cast<int>(g.outer.size());
    for (int i = 0; i < m; ++i) {
        int u = g.outer[i], v = g.outer[(i + 1) % m];
        if ((u == a && v == b) || (u == b && v == a)) return false;
    }
    auto f1 = g.trace_face(a, b), f2 = g.trace_face(b, a);
    if (f1.size() != 3 || f2.size() != 3) return false;
    int c = f1[2], d = f2[2];
    if (c == d || g.has_edge(c, d)) return false;
    g.rot[a].erase(g.rot[a].begin() + g.index_of(a, b));
    g.rot[b].erase(g.rot[b].begin() + g.index_of(b, a));
    g.insert_chord(d, b, c, a);
    return true;
}

/// Double wheel: cycle c_0..c_{m-1} plus an inner hub 0 and an outer hub 1,
/// both joined to the whole cycle. Maximal and 4-connected for m >= 4.
inline PlaneGraph double_wheel(int m) {
    PlaneGraph g(m + 2);
    for (int i = 0; i < m; ++i) g.rot[0].push_back(2 + i);
    for (int i = m - 1; i >= 0; --i) g.rot[1].push_back(2 + i);
    for (int i = 0; i < m; ++i) {
        int v = 2 + i, nx = 2 + (i + 1) % m, pv = 2 + (i + m - 1) % m;
        g.rot[v] = {1, nx, 0, pv};
    }
    g.outer = g.trace_face(1, 2);
    return g;
}

enum class GraphKind { Stacked, RandomMaximal, FourConnected };

inline PlaneGraph gen_maximal_graph(int n, uint64_t seed, GraphKind kind) {
    require(n >= 4, Err::TooSmall, "generators need n >= 4");
    Rng rng(seed);
    switch (kind) {
        case GraphKind::Stacked: {
            PlaneGraph g = k4();
            std::vector<int> face = {0, 1, 3};
            while (g.n < n) {
                int v = insert_vertex_in_face(g, face);
                int pick = rng.below(3);
                face = {face[pick], face[(pick + 1) % 3], v};
            }
            g.validate();
            return g;
        }
        case GraphKind::RandomMaximal: {
            PlaneGraph g = k4();
            std::vector<std::array<int, 3>> faces = {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
            while (g.n < n) {
                int fi = rng.below(static_cast<int>(faces.size()));
                auto f = faces[fi];
                int v = insert_vertex_in_face(g, {f[0], f[1], f[2]});
                faces[fi] = {f[0], f[1], v};
                faces.push_back({f[1], f[2], v});
                faces.push_back({f[2], f[0], v});
            }
            auto es = g.edges();
            int flips = 3 * n;
            for (int t = 0; t < flips; ++t) {
                auto [a, b] = es[rng.below(static_cast<int>(es.size()))];
                flip_edge(g, a, b);
                if ((t & 63) == 63) es = g.edges();
            }
            g.validate();
            require(g.is_maximal(), Err::Internal, "random generator lost maximality");
            return g;
        }
        case GraphKind::FourConnected: {
            require(n >= 6, Err::TooSmall, "four-connected generator needs n >= 6");
            PlaneGraph g = double_wheel(n - 2);
            // Seeded diagonal flips, kept only when they preserve
            // 4-connectivity: both endpoints keep degree >= 4 and the new
            // edge (c,d) closes no triangle beyond its two faces.
            int flips = 2 * n;
            auto es = g.edges();
            for (int t = 0; t < flips; ++t) {
                auto [a, b] = es[rng.below(static_cast<int>(es.size()))];
                if (!g.has_edge(a, b) || g.degree(a) <= 4 || g.degree(b) <= 4) continue;
                auto f1 = g.trace_face(a, b), f2 = g.trace_face(b, a);
                if (f1.size() != 3 || f2.size() != 3) continue;
                int c = f1[2], d = f2[2];
                if (c == d || g.has_edge(c, d)) continue;
                std::set<int> nc(g.rot[c].begin(), g.rot[c].end());
                int shared = 0;
                for (int z : g.rot[d])
                    if (nc.count(z)) ++shared;
                if (shared != 2) continue;  // a flip would create a separating triangle
                flip_edge(g, a, b);
                if ((t & 31) == 31) es = g.edges();
            }
            g.validate();
            require(separating_triangles(g).empty(), Err::Internal, "four-connected generator failed");
            return g;
        }
    }
    fail(Err::Internal, "unknown graph kind");
}

inline PointSet gen_points(int k, uint64_t seed, PointKind kind) {
    require(k >= 1, Err::BadInput, "gen_points needs k >= 1");
    Rng rng(seed);
    PointSet s;
    s.kind = kind;
    if (kind == PointKind::GeneralRandom) {
        int box = std::max(16, 4 * k * k);
        std::set<std::pair<long, long>> used;
        while (static_cast<int>(s.pts.size()) < k) {
            long x = rng.below(box), y = rng.below(box);
            if (used.insert({x, y}).second) s.pts.push_back({Rat(x), Rat(y)});
        }
        return s;
    }
    // Distinct x-coordinates on a downward parabola, then a random shear:
    // strictly convex, one-sided by construction.
    std::set<long> xs;
    while (static_cast<int>(xs.size()) < k) xs.insert(rng.below(std::max(8, 8 * k)));
    long a = rng.below(7) - 3, b = rng.below(20);
    for (long x : xs) s.pts.push_back({Rat(x), Rat(-x * x + a * x + b)});
    return s;
}

}  // namespace pse
