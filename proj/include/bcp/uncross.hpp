#pragma once

#include <span>
#include <vector>

#include "bcp/point_set.hpp"

namespace bcp {

// Greedy cover: j walks from s, each taking the uncovered dominating point of
// least alpha until none is left. Paths come out left to right (upper-left
// first). Throws Uncoverable if points remain.
std::vector<Path> selection_S(const PointSet& ps, std::span<const PointId> points, std::size_t j);

struct UjResult {
    Path path;                       // the rightmost output path
    std::vector<PointId> remaining;  // coverable by j - 1 paths, right of nothing
};

// Walks the rightmost S path; every edge whose lower-right triangle holds
// points of the other paths is replaced by the dominance hull chain of those
// points.
UjResult algorithm_Uj(const PointSet& ps, std::span<const PointId> points, std::size_t j);

// k non-crossing paths covering exactly the given points, left to right. Idle
// s-t paths are kept so the result always has k entries.
std::vector<Path> algorithm_Utilde(const PointSet& ps, std::span<const PointId> points,
                                   std::size_t k);

// Swap the suffixes of paths i and j after crossing edges (a, a+1) and (b, b+1).
// Throws NotCrossing if the edges do not meet.
std::vector<Path> uncross_edges(const PointSet& ps, std::vector<Path> paths, std::size_t i,
                                std::size_t j, std::size_t edge_a, std::size_t edge_b);

}  // namespace bcp
