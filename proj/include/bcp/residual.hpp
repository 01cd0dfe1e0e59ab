#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bcp/point_set.hpp"
#include "bcp/rangemin.hpp"

namespace bcp {

// Pair nodes are encoded as 2 * id + side. The terminals have a single node
// each, which is their plus node.
using NodeKey = std::uint32_t;
enum class Side : std::uint32_t { minus = 0, plus = 1 };

inline NodeKey plus_node(PointId id) { return 2 * id + 1; }
inline PointId node_point(NodeKey key) { return key >> 1; }
inline Side node_side(NodeKey key) { return static_cast<Side>(key & 1); }

// Bitmask over red path indices; a set bit removes that path's edges.
using PathMask = std::uint32_t;

class ResidualNetwork {
public:
    static constexpr int kBlack = -1;

    // Red paths must be node-disjoint, non-crossing dominance chains from s to
    // t, given left to right. Violations throw InvariantBreach.
    ResidualNetwork(const PointSet& points, std::vector<Path> red_paths);

    const PointSet& points() const { return *points_; }
    std::size_t n() const { return points_->n; }
    PointId s() const { return points_->s(); }
    PointId t() const { return points_->t(); }
    NodeKey minus_node(PointId id) const { return id == t() ? plus_node(id) : 2 * id; }

    std::size_t red_count() const { return red_paths_.size(); }
    const Path& red_path(std::size_t j) const { return red_paths_[j]; }
    const std::vector<Path>& red_paths() const { return red_paths_; }
    int color(PointId id) const { return color_[id]; }
    bool is_red(PointId id) const { return color_[id] != kBlack; }
    PointId red_pred(PointId id) const { return red_pred_[id]; }
    PointId red_succ(PointId id) const { return red_succ_[id]; }
    PointId last_on_path(std::size_t j) const { return red_paths_[j][red_paths_[j].size() - 2]; }
    bool has_red_edge(PointId from, PointId to) const;
    std::int64_t weight(PointId id) const { return points_->weight[id]; }

    // Points of path j (t included, s excluded) with beta in (lo, hi], as a
    // half-open index range into beta_chain(j).
    const std::vector<PointId>& beta_chain(std::size_t j) const { return chains_[j]; }
    std::pair<std::size_t, std::size_t> chain_range(std::size_t j, std::int64_t lo,
                                                    std::int64_t hi) const;

    // Weight of the residual edge from -> to with the masked paths removed, or
    // nullopt when there is no such edge.
    std::optional<std::int64_t> edge_weight(NodeKey from, NodeKey to, PathMask mask = 0) const;

private:
    bool edge_active(PointId id, PathMask mask) const {
        return color_[id] == kBlack || !((mask >> color_[id]) & 1u);
    }

    const PointSet* points_;
    std::vector<Path> red_paths_;
    std::vector<int> color_;
    std::vector<PointId> red_pred_;
    std::vector<PointId> red_succ_;
    std::vector<std::vector<PointId>> chains_;
};

struct SubNetworkView {
    std::int64_t beta_lo = 0;
    std::int64_t beta_hi = 0;

    std::int64_t size() const { return beta_hi - beta_lo; }
    bool contains(const PointSet& ps, PointId id) const {
        return ps.beta[id] > beta_lo && ps.beta[id] <= beta_hi;
    }
    std::int64_t mid() const { return beta_lo + (beta_hi - beta_lo) / 2; }
    SubNetworkView lower() const { return {beta_lo, mid()}; }
    SubNetworkView upper() const { return {mid(), beta_hi}; }
};

SubNetworkView subnetwork(const ResidualNetwork& net, std::int64_t beta_lo, std::int64_t beta_hi);
SubNetworkView full_view(const ResidualNetwork& net);

// One implicit Relax(x): all edges (y+, x-) with y in the rectangle and not
// excluded were relaxed at once.
struct TraceEvent {
    enum class Kind : std::uint8_t { edge, rect };
    Kind kind = Kind::edge;
    NodeKey from = 0;
    NodeKey to = 0;
    PointId target = 0;
    std::int64_t alpha_hi = 0;
    std::int64_t beta_lo = 0;
    std::int64_t beta_hi = 0;
    std::vector<PointId> excluded;
};

struct RelaxState {
    static constexpr std::int64_t kInfinity = RangeMinIndex::kInfinity;
    std::vector<std::int64_t> h;   // by NodeKey
    std::vector<NodeKey> pred;     // by NodeKey

    std::int64_t h_plus(PointId id) const { return h[plus_node(id)]; }
    std::int64_t h_minus(PointId id) const { return h[2 * id]; }
};

RelaxState init_arrays(const ResidualNetwork& net);

// h(to) = min(h(to), h(from) + w); returns whether it improved.
bool relax(RelaxState& state, NodeKey from, NodeKey to, std::int64_t edge_weight);

// Plus-node values of s and the regular points, ready for Relax queries.
RangeMinIndex build_index(const ResidualNetwork& net, const RelaxState& state);

// Keeps the range-min index in sync with h and optionally records a trace.
class Relaxer {
public:
    Relaxer(const ResidualNetwork& net, RelaxState& state, RangeMinIndex& index,
            std::vector<TraceEvent>* trace = nullptr)
        : net_(net), state_(state), index_(index), trace_(trace) {}

    bool relax(NodeKey from, NodeKey to, std::int64_t weight);
    // Relax(x) restricted to the view, with the masked red paths removed.
    bool big_relax(PointId x, const SubNetworkView& view, PathMask mask);

    const ResidualNetwork& network() const { return net_; }
    RelaxState& state() { return state_; }
    std::uint64_t queries() const { return queries_; }

private:
    bool apply(NodeKey from, NodeKey to, std::int64_t weight);

    const ResidualNetwork& net_;
    RelaxState& state_;
    RangeMinIndex& index_;
    std::vector<TraceEvent>* trace_;
    std::uint64_t queries_ = 0;
};

// Convenience wrapper over Relaxer for one-off calls.
void big_relax(RelaxState& state, RangeMinIndex& index, PointId x, const SubNetworkView& view,
               const ResidualNetwork& net, PathMask mask = 0);

// Follows pred back from t. Throws CyclicPred on a loop.
std::vector<NodeKey> extract_path(const RelaxState& state, const ResidualNetwork& net);
std::int64_t path_weight(const ResidualNetwork& net, const std::vector<NodeKey>& path);

// Symmetric difference of the path with the red edges, decomposed into s-t
// paths (idle s-t paths included). Throws NotAPath.
std::vector<Path> augment(const ResidualNetwork& net, const std::vector<NodeKey>& path);

}  // namespace bcp
