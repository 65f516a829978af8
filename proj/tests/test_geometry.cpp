#include "pse/geometry.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pse;

TEST_CASE("segment contact classification") {
    Pt a{0, 0}, b{4, 0};
    SECTION("disjoint") { REQUIRE(segment_contact(a, b, {0, 1}, {4, 1}) == SegContact::None); }
    SECTION("proper crossing") {
        REQUIRE(segment_contact({0, 0}, {2, 2}, {0, 2}, {2, 0}) == SegContact::Improper);
    }
    SECTION("shared endpoint") {
        REQUIRE(segment_contact(a, b, b, Pt{5, 3}) == SegContact::SharedEndpoint);
    }
    SECTION("endpoint in interior") {
        REQUIRE(segment_contact(a, b, {2, 0}, {2, 5}) == SegContact::Improper);
    }
    SECTION("collinear overlap") {
        REQUIRE(segment_contact(a, b, {2, 0}, {6, 0}) == SegContact::Improper);
    }
    SECTION("collinear touching at shared endpoint") {
        REQUIRE(segment_contact(a, b, {4, 0}, {6, 0}) == SegContact::SharedEndpoint);
    }
    SECTION("collinear disjoint") {
        REQUIRE(segment_contact(a, b, {5, 0}, {6, 0}) == SegContact::None);
    }
    SECTION("vertex-on-edge via on_segment_open") {
        REQUIRE(on_segment_open({2, 0}, a, b));
        REQUIRE_FALSE(on_segment_open(a, a, b));
        REQUIRE_FALSE(on_segment_open({2, 1}, a, b));
    }
}

TEST_CASE("polygon kernels") {
    SECTION("convex polygon has interior kernel point") {
        std::vector<Pt> sq = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
        auto k = kernel_point(sq);
        REQUIRE(k.has_value());
        REQUIRE(k->x > 0);
        REQUIRE(k->x < 4);
    }
    SECTION("star-shaped non-convex polygon") {
        // Arrowhead quadrilateral, reflex at (2,1).
        std::vector<Pt> dart = {{0, 0}, {4, 0}, {2, 3}, {2, 1}};
        REQUIRE(polygon_area2(dart) > 0);
        auto k = kernel_point(dart);
        REQUIRE(k.has_value());
    }
    SECTION("U-shaped polygon has no kernel") {
        std::vector<Pt> staple = {{0, 0}, {5, 0}, {5, 4}, {4, 4}, {4, 1}, {1, 1}, {1, 4}, {0, 4}};
        REQUIRE(polygon_area2(staple) > 0);
        REQUIRE_FALSE(kernel_point(staple).has_value());
    }
}

TEST_CASE("simplest rational in an open interval") {
    REQUIRE(simplest_in_open(Rat(1, 3), Rat(1, 2)) == Rat(2, 5));
    REQUIRE(simplest_in_open(Rat(0), Rat(1)) == Rat(1, 2));
    REQUIRE(simplest_in_open(Rat(3, 2), Rat(8, 3)) == Rat(2));
    REQUIRE(simplest_in_open(Rat(-5, 2), Rat(-3, 2)) == Rat(-2));
    // Property: result is strictly inside and no smaller denominator fits.
    Rat lo(17, 39), hi(19, 40);
    Rat s = simplest_in_open(lo, hi);
    REQUIRE(s > lo);
    REQUIRE(s < hi);
    for (long q = 1; q < denominator(s).convert_to<long>(); ++q) {
        for (long p = (numerator(lo) * q / denominator(lo)).convert_to<long>() - 2;
             p <= (numerator(hi) * q / denominator(hi)).convert_to<long>() + 2; ++p) {
            Rat cand(p, q);
            REQUIRE_FALSE((cand > lo && cand < hi));
        }
    }
}

TEST_CASE("snap inside convex region stays inside") {
    std::vector<Pt> tri = {{0, 0}, {Rat(7, 3), Rat(1, 9)}, {1, 5}};
    Pt p = snap_inside_convex(tri);
    for (int i = 0; i < 3; ++i) REQUIRE(cross(tri[i], tri[(i + 1) % 3], p) > 0);
}

TEST_CASE("one-sided convex recognition") {
    SECTION("parabola arc is one-sided") {
        std::vector<Pt> pts;
        for (long x : {0L, 1L, 3L, 4L, 7L}) pts.push_back({Rat(x), Rat(-x * x)});
        auto o = one_sided_convex_order(pts);
        REQUIRE(o.has_value());
        REQUIRE(o->order.size() == 5);
        REQUIRE(o->order.front() == 0);
        REQUIRE(o->order.back() == 4);
    }
    SECTION("square is not one-sided") {
        std::vector<Pt> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        REQUIRE_FALSE(one_sided_convex_order(sq).has_value());
    }
    SECTION("interior point breaks convex position") {
        std::vector<Pt> pts = {{0, 0}, {4, 0}, {2, 4}, {2, 1}};
        REQUIRE_FALSE(one_sided_convex_order(pts).has_value());
    }
    SECTION("duplicate point rejected") {
        std::vector<Pt> pts = {{0, 0}, {1, 1}, {0, 0}};
        REQUIRE_FALSE(one_sided_convex_order(pts).has_value());
    }
}

TEST_CASE("exact decimal parsing round-trips") {
    REQUIRE(rat_from_string("-12.625") == Rat(-101, 8));
    REQUIRE(rat_from_string("3/7") == Rat(3, 7));
    REQUIRE(rat_from_string("42") == Rat(42));
    REQUIRE(rat_from_string("0.1") == Rat(1, 10));
    REQUIRE(rat_to_string(Rat(-5, 3)) == "-5/3");
}
