#include "pse/generators.hpp"
#include "pse/plane_graph.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pse;

namespace {

std::vector<Edge> complete_edges(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return es;
}

}  // namespace

TEST_CASE("from_edge_list basics") {
    SECTION("K3 has two faces") {
        auto g = from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
        REQUIRE(g.faces().size() == 2);
        REQUIRE(g.outer.size() == 3);
    }
    SECTION("K4 has four faces") {
        auto g = from_edge_list(4, complete_edges(4));
        REQUIRE(g.faces().size() == 4);
    }
    SECTION("K5 is not planar") {
        REQUIRE_THROWS_MATCHES(from_edge_list(5, complete_edges(5)), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::NonPlanar; }));
    }
    SECTION("explicit rotation preserved verbatim") {
        auto w = double_wheel(5);
        auto g = from_edge_list(w.n, w.edges(), w.rot, w.outer);
        REQUIRE(g.rot == w.rot);
        REQUIRE(g.outer == w.outer);
    }
    SECTION("bad rotation rejected") {
        // K4 with two neighbor lists swapped out of planar order.
        auto k = k4();
        auto rot = k.rot;
        std::swap(rot[3][0], rot[3][1]);
        REQUIRE_THROWS_MATCHES(from_edge_list(4, k.edges(), rot), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::InvalidRotation; }));
    }
    SECTION("unknown outer face rejected") {
        auto k = k4();
        std::vector<int> not_face = {0, 1, 2, 3};
        REQUIRE_THROWS_MATCHES(from_edge_list(4, k.edges(), k.rot, not_face), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::UnknownOuterFace; }));
    }
    SECTION("requested outer face honored when embedding is computed") {
        std::vector<int> cyc = {0, 1, 2, 3};
        auto g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, std::nullopt, cyc);
        REQUIRE(cyclic_equal(g.outer, cyc));
    }
}

TEST_CASE("triangulation to maximal plane graphs") {
    SECTION("4-cycle becomes K4 with two dummy edges") {
        auto g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        auto t = triangulate_to_maximal(g);
        REQUIRE(t.edge_count() == 6);
        REQUIRE(t.is_maximal());
        REQUIRE(t.dummies.size() == 2);
    }
    SECTION("already maximal K4 unchanged") {
        auto g = k4();
        auto t = triangulate_to_maximal(g);
        REQUIRE(t.rot == g.rot);
        REQUIRE(t.dummies.empty());
    }
    SECTION("two disjoint triangles connect then triangulate") {
        auto g = from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        auto t = triangulate_to_maximal(g);
        REQUIRE(t.n == 6);
        REQUIRE(t.edge_count() == 12);
        REQUIRE(t.is_maximal());
    }
    SECTION("original rotation preserved cyclically on original edges") {
        auto g = from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}});
        auto t = triangulate_to_maximal(g);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> restricted;
            for (int w : t.rot[v])
                if (g.has_edge(v, w)) restricted.push_back(w);
            REQUIRE(cyclic_equal(restricted, g.rot[v]));
        }
        for (auto& e : t.dummies) REQUIRE_FALSE(g.has_edge(e.first, e.second));
    }
    SECTION("n < 3 rejected") {
        auto g = from_edge_list(2, {{0, 1}});
        REQUIRE_THROWS_MATCHES(triangulate_to_maximal(g), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::TooSmall; }));
    }
    SECTION("a tree input triangulates cleanly") {
        auto g = from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
        auto t = triangulate_to_maximal(g);
        REQUIRE(t.is_maximal());
        t.validate();
    }
}

TEST_CASE("faces of the octahedron") {
    auto g = double_wheel(4);
    g.validate();
    REQUIRE(g.n == 6);
    REQUIRE(g.edge_count() == 12);
    REQUIRE(g.faces().size() == 8);
}

TEST_CASE("induced subgraphs") {
    SECTION("K4 minus one vertex is K3") {
        auto h = induced_subgraph(k4(), {0, 1, 2});
        REQUIRE(h.n == 3);
        REQUIRE(h.edge_count() == 3);
    }
    SECTION("antipodal pair of the octahedron is edgeless") {
        auto g = double_wheel(4);
        auto h = induced_subgraph(g, {0, 1});  // the two hubs
        REQUIRE(h.edge_count() == 0);
    }
    SECTION("idempotent and monotone") {
        auto g = gen_maximal_graph(24, 7, GraphKind::RandomMaximal);
        std::vector<int> vs = {0, 1, 2, 3, 5, 8, 13, 21};
        auto h1 = induced_subgraph(g, vs);
        std::vector<int> sub = {0, 2, 4, 6};  // h-ids into vs
        std::vector<int> vs2;
        for (int i : sub) vs2.push_back(vs[i]);
        auto h2a = induced_subgraph(h1, sub);
        auto h2b = induced_subgraph(g, vs2);
        REQUIRE(h2a.edge_count() == h2b.edge_count());
        for (auto [u, v] : h2a.edges()) REQUIRE(h2b.has_edge(u, v));
    }
    SECTION("face regions track interior vertices") {
        auto g = gen_maximal_graph(12, 3, GraphKind::Stacked);
        auto sf = induced_with_faces(g, {0, 1, 2, 3});
        int total_inside = 0;
        for (auto& in : sf.inside) total_inside += static_cast<int>(in.size());
        REQUIRE(total_inside == g.n - 4);
    }
}

TEST_CASE("separating triangles") {
    SECTION("octahedron has none") { REQUIRE(separating_triangles(double_wheel(4)).empty()); }
    SECTION("K4 has none") { REQUIRE(separating_triangles(k4()).empty()); }
    SECTION("one stacked vertex makes one") {
        auto g = gen_maximal_graph(5, 1, GraphKind::Stacked);
        auto sep = separating_triangles(g);
        REQUIRE(sep.size() == 1);
        REQUIRE(sep[0] == tkey(0, 1, 3));
    }
    SECTION("stacked depth grows one per insertion") {
        auto g = gen_maximal_graph(10, 5, GraphKind::Stacked);
        REQUIRE(separating_triangles(g).size() == 6);
    }
    SECTION("faces plus separating equals all triangles") {
        for (uint64_t seed : {11, 12, 13}) {
            auto g = gen_maximal_graph(40, seed, GraphKind::RandomMaximal);
            std::set<Triangle> faces;
            for (auto& f : g.faces()) faces.insert(tkey(f[0], f[1], f[2]));
            auto sep = separating_triangles(g);
            REQUIRE(faces.size() + sep.size() == all_triangles(g).size());
        }
    }
    SECTION("non-maximal input rejected") {
        auto g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        REQUIRE_THROWS_MATCHES(separating_triangles(g), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::NotMaximal; }));
    }
}

TEST_CASE("internal 3-connectivity (chordless outer boundary)") {
    REQUIRE(is_internally_3connected(k4()));
    SECTION("wheel W5") {
        PlaneGraph g(6);
        std::vector<Edge> es;
        for (int i = 0; i < 5; ++i) {
            es.emplace_back(5, i);
            es.emplace_back(i, (i + 1) % 5);
        }
        auto w = from_edge_list(6, es, std::nullopt, std::vector<int>{0, 1, 2, 3, 4});
        REQUIRE(is_internally_3connected(w));
    }
    SECTION("outer 4-cycle with an inside chord") {
        auto g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, std::nullopt,
                                std::vector<int>{0, 1, 2, 3});
        REQUIRE_FALSE(is_internally_3connected(g));
    }
}

TEST_CASE("generators produce valid graphs") {
    for (uint64_t seed : {1, 2, 3}) {
        auto a = gen_maximal_graph(30, seed, GraphKind::Stacked);
        REQUIRE(a.is_maximal());
        auto b = gen_maximal_graph(30, seed, GraphKind::RandomMaximal);
        REQUIRE(b.is_maximal());
        auto c = gen_maximal_graph(30, seed, GraphKind::FourConnected);
        REQUIRE(c.is_maximal());
        REQUIRE(separating_triangles(c).empty());
    }
    SECTION("four-connected n=6 is the octahedron") {
        auto g = gen_maximal_graph(6, 42, GraphKind::FourConnected);
        REQUIRE(g.n == 6);
        for (int v = 0; v < 6; ++v) REQUIRE(g.degree(v) == 4);
    }
    SECTION("determinism") {
        auto a = gen_maximal_graph(50, 9, GraphKind::RandomMaximal);
        auto b = gen_maximal_graph(50, 9, GraphKind::RandomMaximal);
        REQUIRE(a.rot == b.rot);
        auto p = gen_points(12, 4, PointKind::OneSidedConvex);
        auto q = gen_points(12, 4, PointKind::OneSidedConvex);
        REQUIRE(p.pts.size() == q.pts.size());
        for (size_t i = 0; i < p.pts.size(); ++i) REQUIRE(p.pts[i] == q.pts[i]);
    }
    SECTION("point sets") {
        auto p = gen_points(9, 5, PointKind::OneSidedConvex);
        REQUIRE(one_sided_convex_order(p.pts).has_value());
        auto r = gen_points(9, 5, PointKind::GeneralRandom);
        std::set<std::pair<std::string, std::string>> uniq;
        for (auto& pt : r.pts) uniq.insert({rat_to_string(pt.x), rat_to_string(pt.y)});
        REQUIRE(uniq.size() == 9);
    }
}
