#include "pse/generators.hpp"
#include "pse/schnyder.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pse;

TEST_CASE("K4 realizer is forced") {
    auto g = k4();
    auto sr = compute_realizer(g);
    REQUIRE(sr.r[0] == 0);
    REQUIRE(sr.r[1] == 1);
    REQUIRE(sr.r[2] == 2);
    REQUIRE(sr.parent[3] == std::array<int, 3>{0, 1, 2});
    REQUIRE(check_realizer_axioms(g, sr).empty());
}

TEST_CASE("K3 realizer is empty") {
    auto g = from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    auto sr = compute_realizer(g);
    for (int v = 0; v < 3; ++v) REQUIRE(sr.parent[v] == std::array<int, 3>{-1, -1, -1});
}

TEST_CASE("realizer axiom suite on random instances") {
    for (uint64_t seed : {1, 2, 3, 4, 5}) {
        auto g = gen_maximal_graph(100, seed, GraphKind::RandomMaximal);
        auto sr = compute_realizer(g);
        auto bad = check_realizer_axioms(g, sr);
        CAPTURE(seed, bad);
        REQUIRE(bad.empty());
    }
    for (uint64_t seed : {1, 2}) {
        auto g = gen_maximal_graph(60, seed, GraphKind::FourConnected);
        REQUIRE(check_realizer_axioms(g, compute_realizer(g)).empty());
        auto s = gen_maximal_graph(60, seed, GraphKind::Stacked);
        REQUIRE(check_realizer_axioms(s, compute_realizer(s)).empty());
    }
}

TEST_CASE("paths to roots are induced and share only v") {
    auto g = gen_maximal_graph(50, 17, GraphKind::RandomMaximal);
    auto sr = compute_realizer(g);
    for (int v = 0; v < g.n; ++v) {
        if (!is_internal(g, v)) continue;
        std::array<std::vector<int>, 3> P;
        for (int c = 0; c < 3; ++c) {
            P[c] = path_to_root(g, sr, v, c);
            REQUIRE(P[c].front() == v);
            REQUIRE(P[c].back() == sr.r[c]);
            // Chordless: no edge between non-consecutive path vertices.
            for (size_t i = 0; i < P[c].size(); ++i)
                for (size_t j = i + 2; j < P[c].size(); ++j) REQUIRE_FALSE(g.has_edge(P[c][i], P[c][j]));
        }
        for (int c = 0; c < 3; ++c)
            for (int d = c + 1; d < 3; ++d) {
                std::set<int> inter;
                std::set<int> a(P[c].begin(), P[c].end());
                for (int u : P[d])
                    if (a.count(u)) inter.insert(u);
                REQUIRE(inter == std::set<int>{v});
            }
    }
}

TEST_CASE("region classification") {
    SECTION("K4 classifications") {
        auto g = k4();
        auto sr = compute_realizer(g);
        REQUIRE(region_of(g, sr, 3, 3) == Region::IsV);
        REQUIRE(region_of(g, sr, 3, 0) == Region::OnP0);
        REQUIRE(region_of(g, sr, 3, 1) == Region::OnP1);
        REQUIRE(region_of(g, sr, 3, 2) == Region::OnP2);
    }
    SECTION("regions plus paths partition the vertex set") {
        auto g = gen_maximal_graph(30, 23, GraphKind::RandomMaximal);
        auto sr = compute_realizer(g);
        for (int v = 0; v < g.n; ++v) {
            if (!is_internal(g, v)) continue;
            auto cls = regions_of_all(g, sr, v);  // throws on incomplete classification
            int counts[7] = {0};
            for (int u = 0; u < g.n; ++u) counts[static_cast<int>(cls[u])]++;
            REQUIRE(counts[static_cast<int>(Region::IsV)] == 1);
        }
    }
}

TEST_CASE("outerpath from two Schnyder paths") {
    SECTION("K4 gives the triangle") {
        auto g = k4();
        auto sr = compute_realizer(g);
        auto op = outerpath_from_two_paths(g, sr, 3, 0, 1);
        REQUIRE(op.boundary.size() == 3);
        REQUIRE(op.extremal == std::make_pair(0, 1));
        REQUIRE(certify_outerpath(g, op).empty());
    }
    SECTION("random instances certify, weak dual is a path") {
        for (uint64_t seed : {2, 4, 6}) {
            auto g = gen_maximal_graph(100, seed, GraphKind::RandomMaximal);
            auto sr = compute_realizer(g);
            for (int v = 0; v < g.n; v += 17) {
                if (!is_internal(g, v)) continue;
                for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
                    auto op = outerpath_from_two_paths(g, sr, v, i, j);
                    auto bad = certify_outerpath(g, op);
                    CAPTURE(seed, v, i, j, bad);
                    REQUIRE(bad.empty());
                }
            }
        }
    }
}

TEST_CASE("order dags") {
    SECTION("K4 dag for i=1 matches the construction") {
        auto g = k4();
        auto sr = compute_realizer(g);
        auto d = build_order_dag(g, sr, 1);
        REQUIRE(d.src == 1);
        REQUIRE(d.snk == 2);
        std::set<std::pair<int, int>> arcs;
        for (int v = 0; v < d.n; ++v)
            for (int w : d.out[v]) arcs.insert({v, w});
        std::set<std::pair<int, int>> want = {{1, 3}, {3, 2}, {1, 2}, {1, 0}, {0, 2}};
        REQUIRE(arcs == want);
    }
    SECTION("acyclic, one source, one sink; all vertices on src-snk routes") {
        for (uint64_t seed : {3, 9}) {
            auto g = gen_maximal_graph(80, seed, GraphKind::RandomMaximal);
            auto sr = compute_realizer(g);
            for (int i = 1; i <= 3; ++i) {
                auto d = build_order_dag(g, sr, i);
                topological_order(d);  // throws on a cycle
                for (int v = 0; v < d.n; ++v) {
                    if (v != d.src) REQUIRE_FALSE(d.in[v].empty());
                    if (v != d.snk) REQUIRE_FALSE(d.out[v].empty());
                }
                REQUIRE(d.in[d.src].empty());
                REQUIRE(d.out[d.snk].empty());
            }
        }
    }
}

TEST_CASE("longest chains") {
    SECTION("K4 chain has three vertices") {
        auto g = k4();
        auto ch = best_chain(g);
        REQUIRE(ch.vertices.size() == 3);
    }
    SECTION("longest path matches exhaustive search on small dags") {
        auto g = gen_maximal_graph(9, 31, GraphKind::RandomMaximal);
        auto sr = compute_realizer(g);
        for (int i = 1; i <= 3; ++i) {
            auto d = build_order_dag(g, sr, i);
            // Exhaustive DFS for the longest path from src.
            int best = 0;
            std::vector<int> stack = {d.src};
            std::function<void(int, int)> dfs = [&](int v, int len) {
                best = std::max(best, len);
                for (int w : d.out[v]) dfs(w, len + 1);
            };
            dfs(d.src, 1);
            auto ch = longest_chain(d);
            REQUIRE(static_cast<int>(ch.vertices.size()) == best);
        }
    }
    SECTION("cube-root bound holds on random maximal graphs") {
        for (uint64_t seed : {1, 2, 3, 4}) {
            for (int n : {27, 64, 200}) {
                auto g = gen_maximal_graph(n, seed, GraphKind::RandomMaximal);
                auto ch = best_chain(g);
                int need = 1;
                while (need * need * need < n) ++need;
                REQUIRE(static_cast<int>(ch.vertices.size()) >= need);
            }
        }
    }
}

TEST_CASE("chain to outerplanar subgraph") {
    for (uint64_t seed : {5, 8}) {
        auto g = gen_maximal_graph(100, seed, GraphKind::RandomMaximal);
        auto sr = compute_realizer(g);
        auto ch = best_chain(g, sr);
        auto cs = chain_to_outerplanar(g, sr, ch);
        // Induced: every host edge between chain vertices appears.
        auto& h = cs.sf.h;
        for (size_t i = 0; i < ch.vertices.size(); ++i)
            for (size_t j = i + 1; j < ch.vertices.size(); ++j)
                REQUIRE(g.has_edge(ch.vertices[i], ch.vertices[j]) ==
                        h.has_edge(cs.sf.g2h[ch.vertices[i]], cs.sf.g2h[ch.vertices[j]]));
        // Extremal edge on the host outer boundary.
        bool on_outer = false;
        for (int i = 0; i < 3; ++i)
            if (ekey(g.outer[i], g.outer[(i + 1) % 3]) == ekey(cs.extremal.first, cs.extremal.second))
                on_outer = true;
        REQUIRE(on_outer);
    }
}

TEST_CASE("comparability audit") {
    SECTION("K4 is vacuous") {
        auto rep = comparability_audit(k4());
        REQUIRE(rep.pass());
    }
    SECTION("random instances have zero violations") {
        for (uint64_t seed : {1, 2, 3}) {
            auto g = gen_maximal_graph(30, seed, GraphKind::RandomMaximal);
            auto rep = comparability_audit(g);
            CAPTURE(seed, rep.violations);
            REQUIRE(rep.pass());
            REQUIRE(rep.pairs_checked > 0);
        }
    }
    SECTION("cap enforced") {
        auto g = gen_maximal_graph(70, 1, GraphKind::RandomMaximal);
        REQUIRE_THROWS_MATCHES(comparability_audit(g), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code == Err::AuditCapExceeded; }));
    }
}
