#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bcp/instance.hpp"
#include "bcp/point_set.hpp"
#include "bcp/residual.hpp"

namespace bcp::testing {

// Hand-checked residual networks with one known shortest path each. Points
// are labelled by their 1-based row; 0 is s and rows + 1 is t.
struct TraceFixture {
    std::string name;
    int k = 2;  // robots after the round, so k - 1 red paths
    std::vector<std::array<std::int64_t, 3>> rows;  // alpha, beta, w
    std::vector<std::vector<int>> red;              // interior labels, left to right
    std::vector<int> path;                          // labels of the shortest path, s to t
    std::int64_t path_cost = 0;
};

// Worked k = 2 example: the path leaves along two black points, walks the red
// path backwards from y4 to y2 and exits through b2, b5, b6. Rows are
// y2, y3, y4, y5, b2, b3, b4, b5, b6.
const TraceFixture& worked_example();

// Zigzags: the shortest path drops from the upper beta half to the lower one
// k - 1 times, each time along a reversed edge of a different red path.
const TraceFixture& zigzag3();
const TraceFixture& zigzag4();

struct LoadedFixture {
    NormalizedInstance inst;
    PointSet ps;
    std::unique_ptr<ResidualNetwork> net;
    std::vector<PointId> id_of;  // label -> point id
    std::vector<PointId> path;   // point ids
    std::vector<NodeKey> nodes;  // node-level path
};

std::unique_ptr<LoadedFixture> load(const TraceFixture& fx);

// Random instance with the optimal non-crossing red paths for `red` robots
// (idle robots dropped). path and nodes are left empty.
std::unique_ptr<LoadedFixture> random_network(std::uint64_t seed, std::size_t n, int red,
                                              std::int64_t horizon = 0, std::int64_t wmax = 9);

// The 3-request instance R1 = (0, 1, 2), R2 = (2, 2, 3), R3 = (-1, 2, 2).
Instance three_requests(int k);

}  // namespace bcp::testing
