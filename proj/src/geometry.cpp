#include "bcp/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "bcp/error.hpp"

namespace bcp {

RawPoint alpha_beta_transform(const Rational& x, const Rational& t, std::size_t source) {
    return RawPoint{t + x, t - x, source};
}

std::pair<Rational, Rational> location_time(const RawPoint& p) {
    const Rational two(2);
    return {(p.alpha - p.beta) / two, (p.alpha + p.beta) / two};
}

bool raw_dominates(const RawPoint& p, const RawPoint& q) {
    if (p.alpha == q.alpha && p.beta == q.beta) return false;
    return p.alpha <= q.alpha && p.beta <= q.beta;
}

std::vector<GridPoint> rank_normalize(std::span<const RawPoint> points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    std::vector<GridPoint> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].id = static_cast<PointId>(i + 1);

    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].alpha != points[b].alpha) return points[a].alpha < points[b].alpha;
        return points[a].beta < points[b].beta;
    });
    for (std::size_t r = 0; r < n; ++r) {
        if (r > 0) {
            const RawPoint& p = points[order[r - 1]];
            const RawPoint& q = points[order[r]];
            if (p.alpha == q.alpha && p.beta == q.beta) {
                throw Error(ErrorCode::duplicate_point,
                            "points " + std::to_string(order[r - 1]) + " and " +
                                std::to_string(order[r]) + " coincide");
            }
        }
        out[order[r]].alpha_rank = static_cast<std::int64_t>(r + 1);
    }

    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].beta != points[b].beta) return points[a].beta < points[b].beta;
        return points[a].alpha < points[b].alpha;
    });
    for (std::size_t r = 0; r < n; ++r) out[order[r]].beta_rank = static_cast<std::int64_t>(r + 1);
    return out;
}

bool dominates(const GridPoint& p, const GridPoint& q) {
    if (p.alpha_rank == q.alpha_rank && p.beta_rank == q.beta_rank) return false;
    return p.alpha_rank <= q.alpha_rank && p.beta_rank <= q.beta_rank;
}

int orientation(Vec2 o, Vec2 p, Vec2 q) {
    __int128 cross = static_cast<__int128>(p.a - o.a) * (q.b - o.b) -
                     static_cast<__int128>(p.b - o.b) * (q.a - o.a);
    return (cross > 0) - (cross < 0);
}

namespace {

// r is collinear with segment pq; is it inside the bounding box?
bool within_box(Vec2 p, Vec2 q, Vec2 r) {
    return std::min(p.a, q.a) <= r.a && r.a <= std::max(p.a, q.a) &&
           std::min(p.b, q.b) <= r.b && r.b <= std::max(p.b, q.b);
}

}  // namespace

bool closed_segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    int d1 = orientation(q1, q2, p1);
    int d2 = orientation(q1, q2, p2);
    int d3 = orientation(p1, p2, q1);
    int d4 = orientation(p1, p2, q2);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && within_box(q1, q2, p1)) return true;
    if (d2 == 0 && within_box(q1, q2, p2)) return true;
    if (d3 == 0 && within_box(p1, p2, q1)) return true;
    if (d4 == 0 && within_box(p1, p2, q2)) return true;
    return false;
}

bool edges_collide(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    if (!closed_segments_intersect(p1, p2, q1, q2)) return false;
    const Vec2 origin{0, 0};
    const bool p_from_origin = p1 == origin || p2 == origin;
    const bool q_from_origin = q1 == origin || q2 == origin;
    if (!p_from_origin || !q_from_origin) return true;
    Vec2 pf = p1 == origin ? p2 : p1;
    Vec2 qf = q1 == origin ? q2 : q1;
    if (pf == origin || qf == origin) return false;
    // Both leave the origin into the closed first quadrant, so collinear
    // means they overlap along a common ray.
    return orientation(origin, pf, qf) == 0;
}

bool segments_cross(const Segment& a, const Segment& b) {
    if (a.from.id == b.from.id || a.from.id == b.to.id || a.to.id == b.from.id ||
        a.to.id == b.to.id) {
        throw Error(ErrorCode::shared_endpoint, "segments share point " + std::to_string(a.from.id));
    }
    auto v = [](const GridPoint& g) { return Vec2{g.alpha_rank, g.beta_rank}; };
    return closed_segments_intersect(v(a.from), v(a.to), v(b.from), v(b.to));
}

std::vector<PlanePoint> dominance_hull_chain(std::span<const PlanePoint> points) {
    if (points.empty()) throw Error(ErrorCode::empty_input, "hull of no points");
    std::vector<PlanePoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const PlanePoint& x, const PlanePoint& y) {
        if (x.pos.a != y.pos.a) return x.pos.a < y.pos.a;
        if (x.pos.b != y.pos.b) return x.pos.b < y.pos.b;
        return x.id < y.id;
    });
    std::vector<PlanePoint> chain;
    for (const PlanePoint& p : sorted) {
        while (chain.size() >= 2 &&
               orientation(chain[chain.size() - 2].pos, chain.back().pos, p.pos) < 0) {
            chain.pop_back();
        }
        chain.push_back(p);
    }
    return chain;
}

std::vector<GridPoint> convex_hull(std::span<const GridPoint> points) {
    std::vector<PlanePoint> plane;
    plane.reserve(points.size());
    for (const GridPoint& g : points) plane.push_back({{g.alpha_rank, g.beta_rank}, g.id});
    std::vector<GridPoint> out;
    for (const PlanePoint& p : dominance_hull_chain(plane)) out.push_back({p.pos.a, p.pos.b, p.id});
    return out;
}

std::vector<Vec2> scale_to_integers(std::span<const RawPoint> points) {
    constexpr __int128 limit = static_cast<__int128>(1) << 61;
    __int128 scale = 1;
    for (const RawPoint& p : points) {
        for (const Rational* r : {&p.alpha, &p.beta}) {
            __int128 g = std::gcd(static_cast<std::int64_t>(scale), r->den());
            scale = scale / g * r->den();
            if (scale > limit) throw Error(ErrorCode::too_large, "coordinate denominators too large");
        }
    }
    std::vector<Vec2> out;
    out.reserve(points.size());
    for (const RawPoint& p : points) {
        __int128 a = static_cast<__int128>(p.alpha.num()) * (scale / p.alpha.den());
        __int128 b = static_cast<__int128>(p.beta.num()) * (scale / p.beta.den());
        if (a > limit || a < -limit || b > limit || b < -limit) {
            throw Error(ErrorCode::too_large, "scaled coordinate exceeds 2^61");
        }
        out.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
    }
    return out;
}

}  // namespace bcp
