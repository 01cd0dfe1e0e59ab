#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bcp/rational.hpp"

namespace bcp {

using PointId = std::uint32_t;

// Request in the rotated frame: alpha = t + x, beta = t - x (speed already 1).
struct RawPoint {
    Rational alpha;
    Rational beta;
    std::size_t source_request = 0;
};

RawPoint alpha_beta_transform(const Rational& x, const Rational& t, std::size_t source = 0);
// Inverse transform, returns (x, t).
std::pair<Rational, Rational> location_time(const RawPoint& p);

// p precedes q: a robot at p can still reach q.
bool raw_dominates(const RawPoint& p, const RawPoint& q);

struct GridPoint {
    std::int64_t alpha_rank = 0;
    std::int64_t beta_rank = 0;
    PointId id = 0;
};

// Ranks 1..n on both axes. Ties on one axis are broken by the other axis, so
// dominance survives. Output ids are input index + 1.
std::vector<GridPoint> rank_normalize(std::span<const RawPoint> points);

bool dominates(const GridPoint& p, const GridPoint& q);

struct Vec2 {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Sign of the cross product (p - o) x (q - o): +1 left turn, -1 right turn, 0 collinear.
int orientation(Vec2 o, Vec2 p, Vec2 q);
bool closed_segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2);
// Closed intersection, except that two segments leaving the origin may share
// it: every robot starts there. Collinear overlap past the origin still counts.
bool edges_collide(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2);

struct Segment {
    GridPoint from;
    GridPoint to;
};

// Closed-segment intersection on rank coordinates; collinear overlap counts.
// Throws SharedEndpoint if the segments share a point id.
bool segments_cross(const Segment& a, const Segment& b);

struct PlanePoint {
    Vec2 pos;
    PointId id = 0;
};

// Lower-right hull chain from the (alpha, beta)-smallest point to the largest,
// collinear points kept. For points lying in an edge's lower-right triangle
// consecutive chain vertices dominate each other.
std::vector<PlanePoint> dominance_hull_chain(std::span<const PlanePoint> points);
std::vector<GridPoint> convex_hull(std::span<const GridPoint> points);

// Exact integer embedding of rational coordinates: every coordinate is
// multiplied by the lcm of all denominators. Throws TooLarge past 2^61.
std::vector<Vec2> scale_to_integers(std::span<const RawPoint> points);

}  // namespace bcp
