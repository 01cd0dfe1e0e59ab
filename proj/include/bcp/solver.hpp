#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bcp/instance.hpp"
#include "bcp/residual.hpp"

namespace bcp {

struct SolverConfig {
    // Views of at most this many points are solved by Bellman-Ford passes.
    // 0 picks 16 * 8^(k-2) for a call with k paths: the recursion's constant
    // grows like k^(3k) while the passes stay few.
    std::int64_t base_case_threshold = 0;
    bool trace = false;

    std::int64_t threshold_for(int k) const;
};

// Invocation counts, indexed by the sub-problem's k (active red paths + 1).
struct SolverCounters {
    static constexpr std::size_t kMaxK = 33;
    std::array<std::uint64_t, kMaxK> a{};
    std::array<std::uint64_t, kMaxK> c{};
    std::array<std::uint64_t, kMaxK> z{};
    std::array<std::uint64_t, kMaxK> ahat{};
    std::uint64_t a1 = 0;
    std::uint64_t delta = 0;
    std::uint64_t base = 0;
};

// The recursive shortest-path algorithms over one residual network. A mask
// removes whole red paths; the number of remaining paths plus one is the k of
// the call.
class Engine {
public:
    Engine(const ResidualNetwork& net, RelaxState& state, RangeMinIndex& index,
           const SolverConfig& cfg, std::vector<TraceEvent>* trace = nullptr);

    void a1(const SubNetworkView& view, PathMask mask = 0);
    void delta(const SubNetworkView& view, PathMask mask = 0);
    void c2(const SubNetworkView& view, PathMask mask = 0);
    void a2(const SubNetworkView& view, PathMask mask = 0);
    void ahat(const SubNetworkView& view, PathMask mask = 0);
    void zk(const SubNetworkView& view, PathMask mask = 0);
    void ck(const SubNetworkView& view, PathMask mask = 0);
    void ak(const SubNetworkView& view, PathMask mask = 0);
    void base_case(const SubNetworkView& view, PathMask mask = 0);

    int k_of(PathMask mask) const;
    const SolverCounters& counters() const { return counters_; }
    std::uint64_t queries() const { return relaxer_.queries(); }

private:
    const std::vector<PointId>& alpha_order(const SubNetworkView& view);
    bool sweep_red_chains(const SubNetworkView& view, PathMask mask);

    const ResidualNetwork& net_;
    Relaxer relaxer_;
    SolverConfig cfg_;
    PathMask all_paths_;
    SolverCounters counters_;
    std::unordered_map<std::uint64_t, std::vector<PointId>> order_cache_;
};

struct RoundStats {
    std::int64_t weight_after = 0;   // collected weight with this many robots
    std::int64_t path_cost = 0;      // h(t) of the round
    double search_ms = 0;            // A_i wall time
    double uncross_ms = 0;
    std::uint64_t queries = 0;
};

struct Solution {
    std::int64_t weight = 0;
    std::vector<Path> paths;                   // non-crossing, left to right, no idle paths
    std::vector<RobotSchedule> schedules;      // k robots, speed-normalized units
    std::vector<RoundStats> rounds;            // one per robot count 1..k
    std::vector<TraceEvent> trace;             // last round's trace when cfg.trace is set
    std::vector<std::vector<TraceEvent>> round_traces;
};

// Observer hook for tests: called after every round with the residual
// network, the shortest path found and the paths before and after Ũ.
struct RoundObserver {
    virtual ~RoundObserver() = default;
    virtual void on_round(int round, const ResidualNetwork& net, const RelaxState& state,
                          const std::vector<NodeKey>& path, const std::vector<Path>& augmented,
                          const std::vector<Path>& uncrossed) = 0;
};

Solution solve(const NormalizedInstance& inst, const SolverConfig& cfg = {},
               RoundObserver* observer = nullptr);
Solution solve(const PointSet& points, int k, const SolverConfig& cfg = {},
               RoundObserver* observer = nullptr);

// Runs init_arrays and A_k on the full view of one network.
RelaxState shortest_paths(const ResidualNetwork& net, const SolverConfig& cfg = {},
                          std::vector<TraceEvent>* trace = nullptr,
                          SolverCounters* counters = nullptr);

std::vector<RobotSchedule> schedules_from_paths(const PointSet& points,
                                                const NormalizedInstance& inst,
                                                const std::vector<Path>& paths, int k);

}  // namespace bcp
