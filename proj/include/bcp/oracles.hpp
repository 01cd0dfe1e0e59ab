#pragma once

#include <cstdint>
#include <vector>

#include "bcp/point_set.hpp"
#include "bcp/residual.hpp"

namespace bcp {

// Reference solvers. None of them touch the range-min index or the recursive
// algorithms.

struct DagEdge {
    std::uint32_t to;
    std::int64_t weight;
};

// Split DAG with explicit edges. Node 0 is s, request i is 2i-1 (minus) and
// 2i (plus), t is 2n+1.
struct ExplicitDag {
    std::size_t n = 0;
    std::vector<std::vector<DagEdge>> adj;
    std::vector<PointId> topo;  // request ids in alpha order

    std::uint32_t s() const { return 0; }
    std::uint32_t t() const { return static_cast<std::uint32_t>(2 * n + 1); }
    static std::uint32_t minus(PointId id) { return 2 * id - 1; }
    static std::uint32_t plus(PointId id) { return 2 * id; }
    std::size_t edge_count() const;
    std::size_t long_edge_count() const;  // everything except the n short edges
};

ExplicitDag build_explicit_dag(const PointSet& points);

struct LongestPath {
    std::int64_t weight = 0;
    std::vector<PointId> points;  // requests visited, in order
};
LongestPath dag_longest_path(const ExplicitDag& dag);

struct SspResult {
    std::vector<std::int64_t> weight_after;  // index i-1: best weight with i robots
    std::vector<Path> paths;                 // flow decomposition after the last round
};
// Label-correcting successive shortest paths; s->t has capacity k.
SspResult successive_shortest_paths(const ExplicitDag& dag, int k);

// Same problem without materialising edges: O(k n^2) with potentials and a
// dense Dijkstra. Used as the large-n baseline.
std::vector<std::int64_t> dense_successive_shortest_paths(const PointSet& points, int k);

// Exact optimum over all ways to cover requests with at most k chains. n <= 14.
std::int64_t brute_force(const PointSet& points, int k);

// Minimum number of chains covering the given requests (bitmask oracle, <= 14 points).
int min_chain_cover(const PointSet& points, const std::vector<PointId>& subset);

struct ResidualShortestPaths {
    std::vector<std::int64_t> dist;  // by NodeKey, RelaxState::kInfinity if unreachable
    std::vector<NodeKey> path;       // one shortest s-t path
    bool unique = false;             // the shortest s-t path is unique
};
// Label-correcting shortest paths on the explicitly enumerated residual
// network, with the masked red paths removed.
ResidualShortestPaths residual_shortest_paths(const ResidualNetwork& net, PathMask mask = 0);

}  // namespace bcp
