#pragma once

#include <vector>

#include "bcp/geometry.hpp"
#include "bcp/point_set.hpp"

namespace bcp::testing {

// Parametric closed-segment intersection in rational arithmetic. Endpoints
// of each segment must differ.
bool rational_segments_meet(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2);

// Point p lies strictly right of the monotone path: the horizontal through p
// meets the path left of p. p must not be on the path.
bool right_of_path(const PointSet& ps, const Path& path, PointId p);

// Every edge (u, w) of path i has no interior point of a later path inside
// the closed box [alpha_u, alpha_w] x [beta_u, beta_w].
bool boxes_empty_of_later_paths(const PointSet& ps, const std::vector<Path>& paths);

// Every interior point of a later path is right of each earlier path.
bool later_paths_on_right(const PointSet& ps, const std::vector<Path>& paths);

}  // namespace bcp::testing
