#include <random>

#include "bcp/error.hpp"
#include "bcp/geometry.hpp"
#include "doctest.h"
#include "oracle_geometry.hpp"

using namespace bcp;

namespace {

GridPoint gp(std::int64_t a, std::int64_t b, PointId id) { return {a, b, id}; }

}  // namespace

TEST_CASE("alpha_beta_transform") {
    auto p = alpha_beta_transform(Rational(1), Rational(3));
    CHECK(p.alpha == Rational(4));
    CHECK(p.beta == Rational(2));
    auto o = alpha_beta_transform(Rational(0), Rational(0));
    CHECK(o.alpha == Rational(0));
    CHECK(o.beta == Rational(0));
    auto n = alpha_beta_transform(Rational(-1), Rational(2));
    CHECK(n.alpha == Rational(1));
    CHECK(n.beta == Rational(3));
}

TEST_CASE("transform round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Rational x(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 9 + 1));
        Rational t(static_cast<std::int64_t>(rng() % 1000), static_cast<std::int64_t>(rng() % 9 + 1));
        auto [x2, t2] = location_time(alpha_beta_transform(x, t));
        CHECK(x2 == x);
        CHECK(t2 == t);
    }
}

TEST_CASE("rank_normalize breaks ties by the other axis") {
    std::vector<RawPoint> raw{{4, 2, 0}, {1, 1, 1}, {1, 3, 2}};
    auto g = rank_normalize(raw);
    REQUIRE(g.size() == 3);
    CHECK(g[1].alpha_rank == 1);
    CHECK(g[2].alpha_rank == 2);
    CHECK(g[0].alpha_rank == 3);
    CHECK(g[1].beta_rank == 1);
    CHECK(g[0].beta_rank == 2);
    CHECK(g[2].beta_rank == 3);
    CHECK(g[0].id == 1);

    std::vector<RawPoint> one{{Rational(15, 2), Rational(15, 2), 0}};
    auto single = rank_normalize(one);
    CHECK(single[0].alpha_rank == 1);
    CHECK(single[0].beta_rank == 1);

    std::vector<RawPoint> dup{{1, 1, 0}, {1, 1, 1}};
    CHECK_THROWS_AS(rank_normalize(dup), Error);
}

TEST_CASE("dominates") {
    const GridPoint s = gp(0, 0, 0);
    CHECK(dominates(s, gp(3, 1, 1)));
    CHECK_FALSE(dominates(gp(1, 2, 1), gp(3, 1, 2)));
    CHECK_FALSE(dominates(gp(3, 1, 2), gp(1, 2, 1)));
    CHECK_FALSE(dominates(gp(2, 2, 1), gp(2, 2, 1)));

    // R1 = (0, 1), R2 = (2, 2), R3 = (-1, 2): R1 precedes R3, R1 and R2 are incomparable.
    RawPoint r1 = alpha_beta_transform(0, 1), r2 = alpha_beta_transform(2, 2), r3 = alpha_beta_transform(-1, 2);
    CHECK(raw_dominates(r1, r3));
    CHECK_FALSE(raw_dominates(r1, r2));
    CHECK_FALSE(raw_dominates(r2, r1));
}

TEST_CASE("segments_cross") {
    CHECK(segments_cross({gp(0, 0, 1), gp(2, 2, 2)}, {gp(0, 2, 3), gp(2, 0, 4)}));
    CHECK_FALSE(segments_cross({gp(0, 0, 1), gp(1, 1, 2)}, {gp(2, 2, 3), gp(3, 3, 4)}));
    CHECK(segments_cross({gp(0, 0, 1), gp(2, 2, 2)}, {gp(1, 1, 3), gp(3, 3, 4)}));
    CHECK_THROWS_AS(segments_cross({gp(0, 0, 1), gp(2, 2, 2)}, {gp(2, 2, 2), gp(3, 0, 4)}), Error);
}

TEST_CASE("segments_cross agrees with the rational oracle") {
    std::mt19937_64 rng(11);
    auto coord = [&] { return static_cast<std::int64_t>(rng() % 7); };
    int checked = 0;
    while (checked < 20000) {
        GridPoint a = gp(coord(), coord(), 1), b = gp(coord(), coord(), 2);
        GridPoint c = gp(coord(), coord(), 3), d = gp(coord(), coord(), 4);
        if ((a.alpha_rank == b.alpha_rank && a.beta_rank == b.beta_rank) ||
            (c.alpha_rank == d.alpha_rank && c.beta_rank == d.beta_rank)) {
            continue;
        }
        const bool want = testing::rational_segments_meet({a.alpha_rank, a.beta_rank}, {b.alpha_rank, b.beta_rank},
                                                          {c.alpha_rank, c.beta_rank}, {d.alpha_rank, d.beta_rank});
        REQUIRE(segments_cross({a, b}, {c, d}) == want);
        REQUIRE(segments_cross({c, d}, {a, b}) == want);
        ++checked;
    }
}

TEST_CASE("edges_collide lets paths share the origin") {
    CHECK_FALSE(edges_collide({0, 0}, {2, 4}, {0, 0}, {4, 2}));
    CHECK(edges_collide({0, 0}, {2, 2}, {0, 0}, {4, 4}));
    CHECK(edges_collide({0, 0}, {4, 4}, {0, 4}, {4, 0}));
}

TEST_CASE("convex_hull") {
    std::vector<GridPoint> one{gp(3, 4, 1)};
    auto h1 = convex_hull(one);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].id == 1);

    std::vector<GridPoint> chain{gp(1, 1, 1), gp(3, 2, 2), gp(4, 4, 3)};
    CHECK(convex_hull(chain).size() == 3);

    CHECK_THROWS_AS(convex_hull(std::vector<GridPoint>{}), Error);
}

TEST_CASE("convex_hull matches the edge-emptiness oracle on triangles") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        // Lower-right triangle with corners (0,0), (40,40), (40,0).
        std::vector<GridPoint> pts;
        while (pts.size() < 20) {
            std::int64_t a = static_cast<std::int64_t>(rng() % 41), b = static_cast<std::int64_t>(rng() % 41);
            if (b > a) continue;
            bool dup = false;
            for (auto& p : pts) dup |= p.alpha_rank == a && p.beta_rank == b;
            if (!dup) pts.push_back(gp(a, b, static_cast<PointId>(pts.size())));
        }
        auto hull = convex_hull(pts);
        REQUIRE(!hull.empty());
        for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
            const Vec2 u{hull[i].alpha_rank, hull[i].beta_rank}, w{hull[i + 1].alpha_rank, hull[i + 1].beta_rank};
            for (auto& p : pts) {
                const Vec2 q{p.alpha_rank, p.beta_rank};
                // Nothing lies right of a hull edge.
                REQUIRE(orientation(u, w, q) >= 0);
                // Collinear points strictly inside an edge would have been chain vertices.
                if (orientation(u, w, q) == 0 && q != u && q != w) {
                    const bool inside = std::min(u.a, w.a) <= q.a && q.a <= std::max(u.a, w.a) &&
                                        std::min(u.b, w.b) <= q.b && q.b <= std::max(u.b, w.b);
                    REQUIRE_FALSE(inside);
                }
            }
            if (i + 2 < hull.size()) {
                const Vec2 x{hull[i + 2].alpha_rank, hull[i + 2].beta_rank};
                REQUIRE(orientation(u, w, x) >= 0);
            }
        }
    }
}

TEST_CASE("scale_to_integers") {
    std::vector<RawPoint> raw{{Rational(1, 2), Rational(1, 3), 0}, {Rational(2), Rational(5, 6), 1}};
    auto v = scale_to_integers(raw);
    CHECK(v[0] == Vec2{3, 2});
    CHECK(v[1] == Vec2{12, 5});
}
