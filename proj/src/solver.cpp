#include "bcp/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "bcp/error.hpp"
#include "bcp/uncross.hpp"

namespace bcp {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

std::int64_t SolverConfig::threshold_for(int k) const {
    if (base_case_threshold > 0) return base_case_threshold;
    return std::int64_t{16} << (3 * std::clamp(k - 2, 0, 12));
}

Engine::Engine(const ResidualNetwork& net, RelaxState& state, RangeMinIndex& index,
               const SolverConfig& cfg, std::vector<TraceEvent>* trace)
    : net_(net),
      relaxer_(net, state, index, trace),
      cfg_(cfg),
      all_paths_(net.red_count() == 0 ? 0 : static_cast<PathMask>((1ull << net.red_count()) - 1)) {
    if (cfg.base_case_threshold < 0) {
        throw Error(ErrorCode::invariant_breach, "base_case_threshold must be >= 0");
    }
}

int Engine::k_of(PathMask mask) const {
    return std::popcount(all_paths_ & ~mask) + 1;
}

const std::vector<PointId>& Engine::alpha_order(const SubNetworkView& view) {
    const auto width = static_cast<std::uint64_t>(net_.n() + 2);
    const std::uint64_t key = static_cast<std::uint64_t>(view.beta_lo) * width +
                              static_cast<std::uint64_t>(view.beta_hi);
    auto [it, fresh] = order_cache_.try_emplace(key);
    if (fresh) {
        const PointSet& ps = net_.points();
        auto& order = it->second;
        order.reserve(static_cast<std::size_t>(view.size()));
        for (std::int64_t b = view.beta_lo + 1; b <= view.beta_hi; ++b) order.push_back(ps.by_beta[b]);
        std::sort(order.begin(), order.end(),
                  [&](PointId a, PointId c) { return ps.alpha[a] < ps.alpha[c]; });
    }
    return it->second;
}

void Engine::a1(const SubNetworkView& view, PathMask mask) {
    ++counters_.a1;
    for (PointId x : alpha_order(view)) relaxer_.big_relax(x, view, mask);
}

void Engine::delta(const SubNetworkView& view, PathMask mask) {
    ++counters_.delta;
    sweep_red_chains(view, mask);
}

bool Engine::sweep_red_chains(const SubNetworkView& view, PathMask mask) {
    const PointId t = net_.t();
    bool changed = false;
    for (std::size_t j = 0; j < net_.red_count(); ++j) {
        if ((mask >> j) & 1u) continue;
        auto [first, last] = net_.chain_range(j, view.beta_lo, view.beta_hi);
        if (first == last) continue;
        const auto& chain = net_.beta_chain(j);
        for (std::size_t i = last - 1; i > first; --i) {
            const PointId y = chain[i];
            if (y != t) changed |= relaxer_.relax(plus_node(y), net_.minus_node(y), net_.weight(y));
            changed |= relaxer_.relax(net_.minus_node(y), plus_node(chain[i - 1]), 0);
        }
        const PointId y1 = chain[first];
        if (y1 != t) changed |= relaxer_.relax(plus_node(y1), net_.minus_node(y1), net_.weight(y1));
    }
    return changed;
}

void Engine::c2(const SubNetworkView& view, PathMask mask) {
    ++counters_.c[2];
    // The single active path, removed for the two sweeps.
    const PathMask only = all_paths_ & ~mask;
    a1(view, mask | only);
    delta(view, mask);
    a1(view, mask | only);
}

void Engine::a2(const SubNetworkView& view, PathMask mask) { ak(view, mask); }

void Engine::base_case(const SubNetworkView& view, PathMask mask) {
    ++counters_.base;
    const auto& order = alpha_order(view);
    // Bellman-Ford over the view until nothing changes. A pass walks every
    // red chain backwards and then relaxes every point in alpha order, so
    // the pass count is bounded by the direction changes of a shortest path.
    const std::int64_t max_passes = 2 * view.size() + 2;
    for (std::int64_t pass = 0; pass < max_passes; ++pass) {
        bool changed = sweep_red_chains(view, mask);
        for (PointId x : order) changed |= relaxer_.big_relax(x, view, mask);
        if (!changed) break;
    }
}

void Engine::ak(const SubNetworkView& view, PathMask mask) {
    const int k = k_of(mask);
    ++counters_.a[k];
    if (view.size() <= 0) return;
    if (k == 1) {
        a1(view, mask);
        return;
    }
    if (view.size() <= cfg_.threshold_for(k)) {
        base_case(view, mask);
        return;
    }
    ak(view.lower(), mask);
    ck(view, mask);
    ak(view.upper(), mask);
}

void Engine::ck(const SubNetworkView& view, PathMask mask) {
    const int k = k_of(mask);
    if (k == 2) {
        c2(view, mask);
        return;
    }
    ++counters_.c[k];
    for (int i = 0; i < k - 1; ++i) {
        ahat(view, mask);
        zk(view, mask);
        ahat(view, mask);
    }
}

void Engine::ahat(const SubNetworkView& view, PathMask mask) {
    ++counters_.ahat[k_of(mask)];
    for (std::size_t j = 0; j < net_.red_count(); ++j) {
        if ((mask >> j) & 1u) continue;
        ak(view, mask | (PathMask{1} << j));
    }
}

void Engine::zk(const SubNetworkView& view, PathMask mask) {
    const int k = k_of(mask);
    ++counters_.z[k];
    if (view.size() <= 0) return;
    if (view.size() <= cfg_.threshold_for(k)) {
        base_case(view, mask);
        return;
    }
    zk(view.upper(), mask);
    delta(view, mask);
    for (int i = 0; i < k - 2; ++i) {
        ahat(view, mask);
        ahat(view, mask);
    }
    zk(view.lower(), mask);
}

RelaxState shortest_paths(const ResidualNetwork& net, const SolverConfig& cfg,
                          std::vector<TraceEvent>* trace, SolverCounters* counters) {
    RelaxState state = init_arrays(net);
    RangeMinIndex index = build_index(net, state);
    Engine engine(net, state, index, cfg, trace);
    engine.ak(full_view(net));
    if (counters) *counters = engine.counters();
    return state;
}

Solution solve(const PointSet& points, int k, const SolverConfig& cfg, RoundObserver* observer) {
    if (k < 1 || static_cast<std::size_t>(k) >= SolverCounters::kMaxK) {
        throw Error(ErrorCode::too_large, "k must be in [1, 32]");
    }
    Solution sol;
    std::vector<Path> red;
    for (int round = 1; round <= k; ++round) {
        ResidualNetwork net(points, red);
        RelaxState state = init_arrays(net);
        RangeMinIndex index = build_index(net, state);
        std::vector<TraceEvent> trace;
        Engine engine(net, state, index, cfg, cfg.trace ? &trace : nullptr);

        RoundStats stats;
        auto start = std::chrono::steady_clock::now();
        engine.ak(full_view(net));
        stats.search_ms = elapsed_ms(start);
        stats.queries = engine.queries();
        if (cfg.trace) sol.round_traces.push_back(std::move(trace));

        const std::int64_t cost = state.h[plus_node(net.t())];
        stats.path_cost = cost;
        if (cost >= 0) {
            // No augmenting path gains weight; later rounds cannot either.
            for (; round <= k; ++round) {
                stats.weight_after = sol.weight;
                sol.rounds.push_back(stats);
                stats = RoundStats{};
            }
            break;
        }
        auto path = extract_path(state, net);
        if (path_weight(net, path) != cost) {
            throw Error(ErrorCode::invariant_breach, "extracted path weight differs from h(t)");
        }
        auto augmented = augment(net, path);
        std::vector<PointId> covered;
        std::size_t busy = 0;
        for (const Path& p : augmented) {
            if (p.size() > 2) ++busy;
            covered.insert(covered.end(), p.begin() + 1, p.end() - 1);
        }
        start = std::chrono::steady_clock::now();
        auto uncrossed = algorithm_Utilde(points, covered, busy);
        stats.uncross_ms = elapsed_ms(start);
        if (observer) observer->on_round(round, net, state, path, augmented, uncrossed);

        red.clear();
        for (Path& p : uncrossed) {
            if (p.size() > 2) red.push_back(std::move(p));
        }
        sol.weight -= cost;
        stats.weight_after = sol.weight;
        sol.rounds.push_back(stats);
    }
    if (cfg.trace && !sol.round_traces.empty()) sol.trace = sol.round_traces.back();
    sol.paths = std::move(red);
    return sol;
}

Solution solve(const NormalizedInstance& inst, const SolverConfig& cfg, RoundObserver* observer) {
    PointSet points = PointSet::from_instance(inst);
    Solution sol = solve(points, inst.k, cfg, observer);
    sol.schedules = schedules_from_paths(points, inst, sol.paths, inst.k);
    return sol;
}

std::vector<RobotSchedule> schedules_from_paths(const PointSet& points,
                                                const NormalizedInstance& inst,
                                                const std::vector<Path>& paths, int k) {
    std::vector<RobotSchedule> out;
    for (const Path& p : paths) {
        RobotSchedule robot{{Rational(0), Rational(0)}};
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            const Request& r = inst.requests[points.request[p[i]]];
            robot.push_back({r.x, r.t});
        }
        out.push_back(std::move(robot));
    }
    while (out.size() < static_cast<std::size_t>(k)) out.push_back({{Rational(0), Rational(0)}});
    return out;
}

}  // namespace bcp
