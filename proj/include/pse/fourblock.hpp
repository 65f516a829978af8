#pragma once

#include "pse/schnyder.hpp"

namespace pse {

/// Nesting tree of all triangles of a maximal plane graph, rooted at the
/// external-face triangle. Leaves are exactly the internal faces; every
/// other non-root node is a separating triangle.
struct FourBlockTree {
    std::vector<Triangle> tri;
    std::vector<std::vector<int>> interior;  // vertices strictly inside each triangle
    std::vector<int> parent;
    std::vector<std::vector<int>> kids;
    std::vector<char> is_face;
    int root = -1;

    int node_count() const { return static_cast<int>(tri.size()); }

    int leaf_count() const {
        int c = 0;
        for (int i = 0; i < node_count(); ++i)
            if (kids[i].empty()) ++c;
        return c;
    }

    int height() const {
        int best = 0;
        std::vector<std::pair<int, int>> stack = {{root, 0}};
        while (!stack.empty()) {
            auto [v, d] = stack.back();
            stack.pop_back();
            best = std::max(best, d);
            for (int k : kids[v]) stack.push_back({k, d + 1});
        }
        return best;
    }
};

inline FourBlockTree build_four_block_tree(const PlaneGraph& g) {
    require(g.is_maximal(), Err::NotMaximal, "4-block tree needs a maximal plane graph");
    FourBlockTree t;
    t.tri = all_triangles(g);
    std::sort(t.tri.begin(), t.tri.end());
    int m = t.node_count();
    t.interior.resize(m);
    FaceAtlas atlas(g);
    std::set<Triangle> faces;
    for (auto& f : atlas.faces) faces.insert(tkey(f[0], f[1], f[2]));
    Triangle outer_tri = tkey(g.outer[0], g.outer[1], g.outer[2]);
    t.is_face.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        t.is_face[i] = faces.count(t.tri[i]) ? 1 : 0;
        t.interior[i] = vertices_inside_cycle(g, atlas, {t.tri[i][0], t.tri[i][1], t.tri[i][2]});
        if (t.tri[i] == outer_tri) t.root = i;
    }
    require(t.root >= 0, Err::Internal, "outer triangle missing from triangle list");

    // Parent: smallest-interior triangle strictly containing a vertex of
    // this one (the nesting family is laminar).
    t.parent.assign(m, -1);
    t.kids.assign(m, {});
    std::vector<std::vector<char>> holds(m, std::vector<char>(g.n, 0));
    for (int i = 0; i < m; ++i)
        for (int v : t.interior[i]) holds[i][v] = 1;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&t](int a, int b) { return t.interior[a].size() < t.interior[b].size(); });
    for (int i = 0; i < m; ++i) {
        if (i == t.root) continue;
        for (int j : order) {
            if (j == i) continue;
            if (holds[j][t.tri[i][0]] || holds[j][t.tri[i][1]] || holds[j][t.tri[i][2]]) {
                t.parent[i] = j;
                break;
            }
        }
        require(t.parent[i] >= 0, Err::Internal, "triangle without a nesting parent");
        t.kids[t.parent[i]].push_back(i);
    }
    for (auto& k : t.kids) std::sort(k.begin(), k.end());
    return t;
}

/// Separating triangles along a longest root-to-leaf path, outermost first.
inline std::vector<Triangle> nested_triangle_sequence(const FourBlockTree& t) {
    int m = t.node_count();
    std::vector<int> depth(m, 0), best_kid(m, -1);
    // Depth of the subtree below each node, deterministic deepest path.
    std::vector<int> order;
    std::vector<int> stack = {t.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int k : t.kids[v]) stack.push_back(k);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int k : t.kids[v])
            if (depth[k] + 1 > depth[v] || (depth[k] + 1 == depth[v] && k < best_kid[v])) {
                depth[v] = depth[k] + 1;
                best_kid[v] = k;
            }
    }
    std::vector<Triangle> seq;
    for (int v = best_kid[t.root]; v >= 0; v = best_kid[v])
        if (!t.is_face[v]) seq.push_back(t.tri[v]);
    return seq;
}

/// Node with the most children; ties go to the smallest preorder index
/// (children visited in ascending node order).
inline int max_outdegree_node(const FourBlockTree& t) {
    int best = t.root;
    std::vector<int> stack = {t.root};
    std::vector<int> pre;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        pre.push_back(v);
        for (auto it = t.kids[v].rbegin(); it != t.kids[v].rend(); ++it) stack.push_back(*it);
    }
    for (int v : pre)
        if (t.kids[v].size() > t.kids[best].size()) best = v;
    return best;
}

/// Pertinent graph of a node: the subgraph induced by its triangle and its
/// children's triangles. Maximal plane with outer face the node triangle,
/// and free of separating triangles.
inline SubgraphFaces pertinent_graph(const PlaneGraph& g, const FourBlockTree& t, int node) {
    require(!t.kids[node].empty(), Err::LeafNode, "pertinent graph of a leaf");
    std::set<int> vs(t.tri[node].begin(), t.tri[node].end());
    for (int k : t.kids[node]) vs.insert(t.tri[k].begin(), t.tri[k].end());
    auto sf = induced_with_faces(g, std::vector<int>(vs.begin(), vs.end()));
    require(sf.h.is_maximal(), Err::Internal, "pertinent graph is not maximal");
    return sf;
}

}  // namespace pse
