#include "pse/substructure.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pse;

TEST_CASE("four-block trees") {
    SECTION("K4: root with three face children") {
        auto t = build_four_block_tree(k4());
        REQUIRE(t.node_count() == 4);
        REQUIRE(t.kids[t.root].size() == 3);
        REQUIRE(t.leaf_count() == 3);
        REQUIRE(nested_triangle_sequence(t).empty());
    }
    SECTION("octahedron: depth one, seven leaves") {
        auto t = build_four_block_tree(double_wheel(4));
        REQUIRE(t.node_count() == 8);
        REQUIRE(t.leaf_count() == 7);
        REQUIRE(t.height() == 1);
        REQUIRE(nested_triangle_sequence(t).empty());
        REQUIRE(max_outdegree_node(t) == t.root);
    }
    SECTION("stacked graphs nest one triangle per insertion") {
        auto g5 = gen_maximal_graph(5, 1, GraphKind::Stacked);
        auto t5 = build_four_block_tree(g5);
        REQUIRE(nested_triangle_sequence(t5).size() == 1);
        auto g10 = gen_maximal_graph(10, 2, GraphKind::Stacked);
        auto t10 = build_four_block_tree(g10);
        REQUIRE(nested_triangle_sequence(t10).size() == 6);
        REQUIRE(t10.height() >= 6);
    }
    SECTION("leaves are internal faces") {
        auto g = gen_maximal_graph(30, 3, GraphKind::RandomMaximal);
        auto t = build_four_block_tree(g);
        REQUIRE(t.leaf_count() == 2 * g.n - 5);
    }
    SECTION("pertinent graphs") {
        auto oct = double_wheel(4);
        auto t = build_four_block_tree(oct);
        auto p = pertinent_graph(oct, t, t.root);
        REQUIRE(p.h.n == 6);
        auto g = gen_maximal_graph(8, 4, GraphKind::Stacked);
        auto ts = build_four_block_tree(g);
        auto pr = pertinent_graph(g, ts, ts.root);
        REQUIRE(pr.h.n == 4);
        REQUIRE(pr.h.is_maximal());
        int leaf = -1;
        for (int i = 0; i < ts.node_count(); ++i)
            if (ts.kids[i].empty()) leaf = i;
        REQUIRE_THROWS_MATCHES(pertinent_graph(g, ts, leaf), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::LeafNode; }));
    }
}

namespace {

void check_layout_for(const PlaneGraph& g) {
    int u = g.outer[0], w = g.outer[1], v = g.outer[2];
    auto f = g.trace_face(v, w);
    if (cyclic_equal(f, g.outer)) f = g.trace_face(w, v);
    int wp = -1;
    for (int z : f)
        if (z != v && z != w) wp = z;
    auto lay = rectangular_representation(g, u, v, w, wp);
    auto bad = verify_rect_layout(g, lay);
    CAPTURE(g.n, bad);
    REQUIRE(bad.empty());
    // Integer coordinates within O(n).
    REQUIRE(lay.width <= 2 * g.n);
    REQUIRE(lay.height <= 2 * g.n);

    auto st = best_stabber(g, lay);
    REQUIRE(static_cast<long>(st.stabbed.size()) >= stabber_bound(g.n));
    // Stabbed rectangles form a chordless path of the host.
    for (size_t i = 0; i + 1 < st.stabbed.size(); ++i) REQUIRE(g.has_edge(st.stabbed[i], st.stabbed[i + 1]));
    for (size_t i = 0; i < st.stabbed.size(); ++i)
        for (size_t j = i + 2; j < st.stabbed.size(); ++j) REQUIRE_FALSE(g.has_edge(st.stabbed[i], st.stabbed[j]));

    auto op = outerpath_from_stabber(g, lay, st);
    auto opbad = certify_outerpath(g, op);
    CAPTURE(opbad);
    REQUIRE(opbad.empty());
}

}  // namespace

TEST_CASE("rectangular representations") {
    SECTION("octahedron") { check_layout_for(double_wheel(4)); }
    SECTION("double wheels and flipped variants") {
        for (int n : {7, 9, 12, 20, 37, 60}) {
            for (uint64_t seed : {1, 2}) {
                auto g = gen_maximal_graph(n, seed, GraphKind::FourConnected);
                check_layout_for(g);
            }
        }
    }
    SECTION("bad designation rejected") {
        auto g = double_wheel(4);
        REQUIRE_THROWS_MATCHES(rectangular_representation(g, 0, 1, 2, 3), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::BadDesignation; }));
    }
    SECTION("separating triangle rejected") {
        auto g = gen_maximal_graph(8, 1, GraphKind::Stacked);
        REQUIRE_THROWS_MATCHES(rectangular_representation(g, g.outer[0], g.outer[2], g.outer[1], 3), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::Not4Connected; }));
    }
}

TEST_CASE("external outerpath extraction") {
    SECTION("bounds are tiny at desk scale") {
        REQUIRE(general_side_path_bound(4096) == 1);
        REQUIRE(general_side_path_bound(2) == 0);
        REQUIRE(general_side_path_bound(1L << 25) == 1);
        REQUIRE(stabber_bound(6) == 1);
        REQUIRE(stabber_bound(17) == 1);
        REQUIRE(stabber_bound(18) == 2);
        REQUIRE(nested_triangle_bound(28) == 10);
        REQUIRE(ceil_cbrt(1000) == 10);
        REQUIRE(ceil_cbrt(27) == 3);
        REQUIRE(ceil_cbrt(28) == 4);
    }
    SECTION("route 1 on random and stacked graphs") {
        for (uint64_t seed : {1, 5, 9}) {
            auto g = gen_maximal_graph(120, seed, GraphKind::RandomMaximal);
            auto ex = find_external_outerpath(g);
            REQUIRE(ex.route == 1);
            REQUIRE(ex.side_path_size >= ex.bound);
            REQUIRE(certify_outerpath(ex.host, ex.op).empty());
        }
        auto s = gen_maximal_graph(34, 2, GraphKind::Stacked);  // 28 nested triangles
        auto ex = find_external_outerpath(s);
        REQUIRE(ex.side_path_size >= nested_triangle_bound(28));
    }
    SECTION("stabber route exercised directly") {
        auto g = gen_maximal_graph(40, 3, GraphKind::FourConnected);
        auto tree = build_four_block_tree(g);
        int mu = max_outdegree_node(tree);
        auto pert = pertinent_graph(g, tree, mu);
        REQUIRE(pert.h.n >= 6);
    }
}
