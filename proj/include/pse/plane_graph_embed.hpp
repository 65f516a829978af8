#pragma once

#include "pse/plane_graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

namespace pse {

namespace detail {

inline int pick_default_outer(const PlaneGraph& g) {
    auto fs = g.faces();
    int best = -1;
    std::vector<int> best_canon;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        if (best < 0 || fs[i].size() > fs[best].size()) {
            best = i;
            best_canon = canonical_rotation(fs[i]);
        } else if (fs[i].size() == fs[best].size()) {
            auto c = canonical_rotation(fs[i]);
            if (c < best_canon) {
                best = i;
                best_canon = c;
            }
        }
    }
    return best;
}

}  // namespace detail

inline PlaneGraph from_edge_list(int n, const std::vector<Edge>& edges,
                                 const std::optional<std::vector<std::vector<int>>>& rotation,
                                 const std::optional<std::vector<int>>& outer) {
    require(n >= 1, Err::BadInput, "graph needs at least one vertex");
    std::set<Edge> eset;
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, Err::BadInput, "edge endpoint out of range");
        require(u != v, Err::BadInput, "self-loop");
        require(eset.insert(ekey(u, v)).second, Err::BadInput, "duplicate edge");
    }

    PlaneGraph g(n);

    if (rotation) {
        require(static_cast<int>(rotation->size()) == n, Err::InvalidRotation, "rotation size mismatch");
        g.rot = *rotation;
        std::set<Edge> rset;
        for (int v = 0; v < n; ++v)
            for (int w : g.rot[v]) rset.insert(ekey(v, w));
        require(rset == eset, Err::InvalidRotation, "rotation edges differ from edge list");
        for (int v = 0; v < n; ++v) {
            std::set<int> seen(g.rot[v].begin(), g.rot[v].end());
            require(seen.size() == g.rot[v].size(), Err::InvalidRotation, "repeated neighbor in rotation");
            for (int w : g.rot[v]) require(g.has_edge(w, v), Err::InvalidRotation, "asymmetric rotation");
        }
        if (g.edge_count() > 0) {
            require(g.connected(), Err::BadInput, "rotation given for a disconnected graph");
            int f = 0;
            {
                auto fs = g.faces();
                f = static_cast<int>(fs.size());
                require(f == g.edge_count() - n + 2, Err::InvalidRotation, "rotation fails the Euler face count");
                if (outer) {
                    bool found = false;
                    for (auto& fw : fs)
                        if (cyclic_equal(fw, *outer)) {
                            g.outer = fw;
                            found = true;
                            break;
                        }
                    require(found, Err::UnknownOuterFace, "supplied outer cycle is not a traced face");
                } else {
                    g.outer = fs[detail::pick_default_outer(g)];
                }
            }
        }
        g.validate();
        return g;
    }

    // Connect components with dummy bridges, then embed with Boyer-Myrvold.
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [u, v] : edges) comp[find(u)] = find(v);
    std::vector<Edge> work = edges;
    std::vector<int> reps;
    std::vector<char> seenc(n, 0);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (!seenc[r]) {
            seenc[r] = 1;
            reps.push_back(r);
        }
    }
    for (size_t i = 1; i < reps.size(); ++i) {
        work.push_back(ekey(reps[0], reps[i]));
        g.dummies.insert(ekey(reps[0], reps[i]));
    }

    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
    BGraph bg(n);
    int eidx = 0;
    for (auto [u, v] : work) boost::add_edge(u, v, eidx++, bg);
    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
    require(planar, Err::NonPlanar, "graph is not planar");
    for (int v = 0; v < n; ++v)
        for (auto e : emb[v]) {
            int u = static_cast<int>(boost::source(e, bg));
            int w = static_cast<int>(boost::target(e, bg));
            g.rot[v].push_back(u == v ? w : u);
        }

    if (g.edge_count() > 0) {
        auto match_outer = [&]() -> bool {
            if (!outer) return true;
            for (auto& fw : g.faces())
                if (cyclic_equal(fw, *outer)) {
                    g.outer = fw;
                    return true;
                }
            return false;
        };
        if (!match_outer()) {
            // The orientation is ours to choose when no rotation was given:
            // mirror the embedding and retry before giving up.
            for (auto& r : g.rot) std::reverse(r.begin(), r.end());
            require(match_outer(), Err::UnknownOuterFace, "supplied outer cycle is not a face of the embedding");
        }
        if (!outer) g.outer = g.faces()[detail::pick_default_outer(g)];
    }
    g.validate();
    return g;
}

}  // namespace pse
