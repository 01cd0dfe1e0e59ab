#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bcp/geometry.hpp"
#include "bcp/instance.hpp"

namespace bcp {

using Path = std::vector<PointId>;  // s ... t

// Rank-normalized requests plus the two terminals. Ids: s = 0, requests
// 1..n, t = n + 1. Rank arrays are indexed by id; s sits at (0, 0) and t at
// (n + 1, n + 1).
struct PointSet {
    std::size_t n = 0;
    std::vector<std::int64_t> alpha;
    std::vector<std::int64_t> beta;
    std::vector<std::int64_t> weight;
    std::vector<Vec2> plane;              // exact scaled raw alpha-beta coordinates
    std::vector<PointId> by_alpha;        // alpha rank -> id
    std::vector<PointId> by_beta;         // beta rank -> id
    std::vector<std::size_t> request;     // id -> normalized request index (ids 1..n)

    PointId s() const { return 0; }
    PointId t() const { return static_cast<PointId>(n + 1); }
    std::size_t size_with_terminals() const { return n + 2; }
    bool precedes(PointId a, PointId b) const {
        return a != b && alpha[a] <= alpha[b] && beta[a] <= beta[b];
    }
    GridPoint grid(PointId id) const { return {alpha[id], beta[id], id}; }
    PlanePoint plane_point(PointId id) const { return {plane[id], id}; }

    static PointSet from_instance(const NormalizedInstance& inst);
};

struct PathCrossing {
    std::size_t path_a = 0;
    std::size_t edge_a = 0;  // edge e joins path[e] and path[e + 1]
    std::size_t path_b = 0;
    std::size_t edge_b = 0;
};

// First colliding pair of edges from distinct paths, in exact scaled
// alpha-beta coordinates. Edge pairs sharing a point id are skipped. Paths
// must be dominance chains.
std::optional<PathCrossing> find_path_crossing(const PointSet& ps, const std::vector<Path>& paths);

// Integer alpha/beta/weight triples as a speed-1 instance (x = (a-b)/2, t = (a+b)/2).
NormalizedInstance instance_from_alpha_beta(const std::vector<std::array<std::int64_t, 3>>& rows,
                                            int k);

}  // namespace bcp
