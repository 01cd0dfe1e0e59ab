#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bcp/residual.hpp"

namespace bcp::testing {

// Node-level path through the residual network visiting the given points in
// order. A hop a -> b uses the reversed red edge when b precedes a on a red
// path and the black long edge otherwise; short edges are inserted wherever
// the arrival side differs from the departure side.
std::vector<NodeKey> expand_point_path(const ResidualNetwork& net, const std::vector<PointId>& points);

// Index of the first consecutive edge of path that the trace does not relax
// in order, or path.size() - 1 when the whole path is followed. A rect event
// relaxes (u, v) when v is its target node and u is a plus node inside the
// rectangle and not excluded.
std::size_t follow_prefix(const ResidualNetwork& net, const std::vector<TraceEvent>& trace,
                          const std::vector<NodeKey>& path);

inline bool follows(const ResidualNetwork& net, const std::vector<TraceEvent>& trace,
                    const std::vector<NodeKey>& path) {
    return path.size() < 2 || follow_prefix(net, trace, path) == path.size() - 1;
}

std::string node_name(const ResidualNetwork& net, NodeKey key);
std::string path_str(const ResidualNetwork& net, const std::vector<NodeKey>& path);

}  // namespace bcp::testing
