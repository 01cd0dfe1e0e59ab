#include "bcp/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "bcp/error.hpp"

namespace bcp {

namespace {

constexpr std::int64_t kInf = RelaxState::kInfinity;

std::vector<PointId> ids_by_alpha(const PointSet& ps) {
    std::vector<PointId> ids(ps.n);
    std::iota(ids.begin(), ids.end(), PointId{1});
    std::sort(ids.begin(), ids.end(), [&](PointId a, PointId b) { return ps.alpha[a] < ps.alpha[b]; });
    return ids;
}

struct Arc {
    std::uint32_t to;
    std::int64_t cost;
    std::int64_t cap;
    std::uint32_t rev;
    bool original;
};

struct FlowGraph {
    std::vector<std::vector<Arc>> adj;

    explicit FlowGraph(std::size_t nodes) : adj(nodes) {}
    void add(std::uint32_t u, std::uint32_t v, std::int64_t cost, std::int64_t cap) {
        adj[u].push_back({v, cost, cap, static_cast<std::uint32_t>(adj[v].size()), true});
        adj[v].push_back({u, -cost, 0, static_cast<std::uint32_t>(adj[u].size() - 1), false});
    }
};

// Queue-based Bellman-Ford; the residual graphs here never hold negative cycles.
std::vector<std::int64_t> label_correcting(const std::vector<std::vector<DagEdge>>& adj,
                                           std::uint32_t source,
                                           std::vector<std::uint32_t>* pred = nullptr) {
    std::vector<std::int64_t> dist(adj.size(), kInf);
    std::vector<char> queued(adj.size(), 0);
    std::vector<std::size_t> relabels(adj.size(), 0);
    if (pred) pred->assign(adj.size(), source);
    std::deque<std::uint32_t> queue{source};
    dist[source] = 0;
    queued[source] = 1;
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        queued[u] = 0;
        for (const DagEdge& e : adj[u]) {
            if (dist[u] + e.weight < dist[e.to]) {
                dist[e.to] = dist[u] + e.weight;
                if (pred) (*pred)[e.to] = u;
                if (++relabels[e.to] > adj.size()) {
                    throw Error(ErrorCode::invariant_breach, "negative cycle in oracle graph");
                }
                if (!queued[e.to]) {
                    queued[e.to] = 1;
                    queue.push_back(e.to);
                }
            }
        }
    }
    return dist;
}

}  // namespace

std::size_t ExplicitDag::edge_count() const {
    std::size_t total = 0;
    for (const auto& edges : adj) total += edges.size();
    return total;
}

std::size_t ExplicitDag::long_edge_count() const { return edge_count() - n; }

ExplicitDag build_explicit_dag(const PointSet& ps) {
    ExplicitDag dag;
    dag.n = ps.n;
    dag.adj.assign(2 * ps.n + 2, {});
    dag.topo = ids_by_alpha(ps);
    for (PointId i = 1; i <= ps.n; ++i) {
        dag.adj[dag.s()].push_back({ExplicitDag::minus(i), 0});
        dag.adj[ExplicitDag::minus(i)].push_back({ExplicitDag::plus(i), -ps.weight[i]});
        for (PointId j = 1; j <= ps.n; ++j) {
            if (ps.precedes(i, j)) dag.adj[ExplicitDag::plus(i)].push_back({ExplicitDag::minus(j), 0});
        }
        dag.adj[ExplicitDag::plus(i)].push_back({dag.t(), 0});
    }
    dag.adj[dag.s()].push_back({dag.t(), 0});
    return dag;
}

LongestPath dag_longest_path(const ExplicitDag& dag) {
    std::vector<std::int64_t> dist(dag.adj.size(), kInf);
    std::vector<std::uint32_t> pred(dag.adj.size(), dag.s());
    dist[dag.s()] = 0;
    std::vector<std::uint32_t> order{dag.s()};
    for (PointId id : dag.topo) {
        order.push_back(ExplicitDag::minus(id));
        order.push_back(ExplicitDag::plus(id));
    }
    for (std::uint32_t u : order) {
        if (dist[u] == kInf) continue;
        for (const DagEdge& e : dag.adj[u]) {
            if (dist[u] + e.weight < dist[e.to]) {
                dist[e.to] = dist[u] + e.weight;
                pred[e.to] = u;
            }
        }
    }
    LongestPath out;
    out.weight = -dist[dag.t()];
    for (std::uint32_t v = pred[dag.t()]; v != dag.s(); v = pred[v]) {
        if (v % 2 == 0) out.points.push_back(v / 2);
    }
    std::reverse(out.points.begin(), out.points.end());
    return out;
}

SspResult successive_shortest_paths(const ExplicitDag& dag, int k) {
    const std::size_t nodes = dag.adj.size();
    FlowGraph g(nodes);
    for (std::uint32_t u = 0; u < nodes; ++u) {
        for (const DagEdge& e : dag.adj[u]) {
            const bool direct = u == dag.s() && e.to == dag.t();
            g.add(u, e.to, e.weight, direct ? k : 1);
        }
    }
    SspResult out;
    std::int64_t weight = 0;
    for (int round = 1; round <= k; ++round) {
        // Label-correcting search over arcs with spare capacity.
        std::vector<std::int64_t> dist(nodes, kInf);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> via(nodes, {0, 0});
        std::vector<char> queued(nodes, 0);
        std::deque<std::uint32_t> queue{dag.s()};
        dist[dag.s()] = 0;
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop_front();
            queued[u] = 0;
            for (std::uint32_t a = 0; a < g.adj[u].size(); ++a) {
                const Arc& arc = g.adj[u][a];
                if (arc.cap <= 0 || dist[u] + arc.cost >= dist[arc.to]) continue;
                dist[arc.to] = dist[u] + arc.cost;
                via[arc.to] = {u, a};
                if (!queued[arc.to]) {
                    queued[arc.to] = 1;
                    queue.push_back(arc.to);
                }
            }
        }
        if (dist[dag.t()] < 0) {
            for (std::uint32_t v = dag.t(); v != dag.s();) {
                auto [u, a] = via[v];
                Arc& arc = g.adj[u][a];
                arc.cap -= 1;
                g.adj[v][arc.rev].cap += 1;
                v = u;
            }
            weight -= dist[dag.t()];
        }
        out.weight_after.push_back(weight);
    }
    // Decompose the final flow; an original arc carries flow when its reverse
    // has capacity.
    std::vector<std::vector<std::uint32_t>> next(nodes);
    for (std::uint32_t u = 0; u < nodes; ++u) {
        for (const Arc& arc : g.adj[u]) {
            if (!arc.original || g.adj[arc.to][arc.rev].cap == 0) continue;
            if (u == dag.s() && arc.to == dag.t()) continue;
            next[u].push_back(arc.to);
        }
    }
    for (std::uint32_t first : next[dag.s()]) {
        Path p{0};
        std::uint32_t v = first;
        while (v != dag.t()) {
            if (v % 2 == 0) p.push_back(v / 2);
            if (next[v].empty()) break;
            v = next[v][0];
        }
        p.push_back(static_cast<PointId>(dag.n + 1));
        out.paths.push_back(std::move(p));
    }
    return out;
}

std::vector<std::int64_t> dense_successive_shortest_paths(const PointSet& ps, int k) {
    const std::size_t n = ps.n;
    const std::size_t nodes = 2 * n + 2;
    const std::uint32_t s = 0, t = static_cast<std::uint32_t>(2 * n + 1);
    constexpr std::int64_t none = -1;
    auto minus = [](std::size_t i) { return static_cast<std::uint32_t>(2 * i - 1); };
    auto plus = [](std::size_t i) { return static_cast<std::uint32_t>(2 * i); };

    // Requests in alpha order for cache-friendly successor scans.
    std::vector<PointId> order = ids_by_alpha(ps);
    std::vector<std::size_t> rank_of(n + 1, 0);
    std::vector<std::int64_t> beta_sorted(n);
    for (std::size_t r = 0; r < n; ++r) {
        rank_of[order[r]] = r;
        beta_sorted[r] = ps.beta[order[r]];
    }

    std::vector<std::int64_t> succ_of(n + 1, none);  // point id, n+1 for t
    std::vector<std::int64_t> pred_of(n + 1, none);  // point id, 0 for s

    // Initial potentials: plain DAG shortest distances.
    std::vector<std::int64_t> pot(nodes, 0);
    {
        std::vector<std::int64_t> best_plus(n, 0);  // by alpha position
        std::int64_t best_t = 0;
        for (std::size_t r = 0; r < n; ++r) {
            std::int64_t into = 0;
            for (std::size_t q = 0; q < r; ++q) {
                if (beta_sorted[q] <= beta_sorted[r]) into = std::min(into, best_plus[q]);
            }
            const PointId id = order[r];
            pot[minus(id)] = into;
            best_plus[r] = into - ps.weight[id];
            pot[plus(id)] = best_plus[r];
            best_t = std::min(best_t, best_plus[r]);
        }
        pot[t] = best_t;
    }

    std::vector<std::int64_t> out;
    std::int64_t weight = 0;
    std::vector<std::int64_t> dist(nodes);
    std::vector<std::uint32_t> from(nodes);
    std::vector<char> done(nodes);
    using Item = std::pair<std::int64_t, std::uint32_t>;
    for (int round = 1; round <= k; ++round) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(done.begin(), done.end(), 0);
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist[s] = 0;
        heap.push({0, s});
        auto push = [&](std::uint32_t u, std::uint32_t v, std::int64_t cost) {
            std::int64_t nd = dist[u] + cost + pot[u] - pot[v];
            if (nd < dist[v]) {
                dist[v] = nd;
                from[v] = u;
                heap.push({nd, v});
            }
        };
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (done[u] || d != dist[u]) continue;
            done[u] = 1;
            if (u == s) {
                for (std::size_t i = 1; i <= n; ++i) {
                    if (pred_of[i] != 0) push(u, minus(i), 0);
                }
                push(u, t, 0);
            } else if (u == t) {
                for (std::size_t i = 1; i <= n; ++i) {
                    if (succ_of[i] == static_cast<std::int64_t>(n + 1)) push(u, plus(i), 0);
                }
            } else if (u % 2 == 1) {
                const std::size_t i = (u + 1) / 2;
                if (pred_of[i] == none) {
                    push(u, plus(i), -ps.weight[i]);
                } else if (pred_of[i] != 0) {
                    push(u, plus(static_cast<std::size_t>(pred_of[i])), 0);
                }
            } else {
                const std::size_t i = u / 2;
                if (pred_of[i] != none) push(u, minus(i), ps.weight[i]);
                const std::int64_t b = ps.beta[i];
                for (std::size_t r = rank_of[i] + 1; r < n; ++r) {
                    if (beta_sorted[r] >= b && succ_of[i] != static_cast<std::int64_t>(order[r])) {
                        push(u, minus(order[r]), 0);
                    }
                }
                if (succ_of[i] != static_cast<std::int64_t>(n + 1)) push(u, t, 0);
            }
        }
        const std::int64_t cost = dist[t] + pot[t] - pot[s];
        if (cost >= 0) {
            out.push_back(weight);
            continue;
        }
        weight -= cost;
        out.push_back(weight);

        // Collect the flow changes along the path, then apply removals first.
        std::vector<std::pair<std::size_t, std::size_t>> added, removed;
        auto point_of = [&](std::uint32_t v) -> std::size_t {
            if (v == s) return 0;
            if (v == t) return n + 1;
            return (v + 1) / 2;
        };
        for (std::uint32_t v = t; v != s; v = from[v]) {
            const std::uint32_t u = from[v];
            const std::size_t pu = point_of(u), pv = point_of(v);
            if (pu == pv) continue;
            const bool forward = (u == s) || (u != t && u % 2 == 0);
            if (forward) {
                added.emplace_back(pu, pv);
            } else {
                removed.emplace_back(pv, pu);
            }
        }
        for (auto [a, b] : removed) {
            if (a != 0) succ_of[a] = none;
            if (b != n + 1) pred_of[b] = none;
        }
        for (auto [a, b] : added) {
            if (a != 0) succ_of[a] = static_cast<std::int64_t>(b);
            if (b != n + 1) pred_of[b] = static_cast<std::int64_t>(a);
        }
        for (std::size_t v = 0; v < nodes; ++v) {
            if (dist[v] != kInf) pot[v] += dist[v];
        }
    }
    return out;
}

int min_chain_cover(const PointSet& ps, const std::vector<PointId>& subset) {
    const std::size_t m = subset.size();
    if (m > 14) throw Error(ErrorCode::too_large, "chain cover oracle limited to 14 points");
    const std::uint32_t full = (1u << m) - 1;
    std::vector<std::uint32_t> comparable(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || ps.precedes(subset[a], subset[b]) || ps.precedes(subset[b], subset[a])) {
                comparable[a] |= 1u << b;
            }
        }
    }
    std::vector<char> chain(full + 1, 0);
    chain[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        chain[mask] = chain[rest] && (comparable[low] & rest) == rest;
    }
    std::vector<int> cover(full + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        int best = 1 << 20;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            if (chain[sub | low]) best = std::min(best, 1 + cover[mask ^ (sub | low)]);
            if (sub == 0) break;
        }
        cover[mask] = best;
    }
    return cover[full];
}

std::int64_t brute_force(const PointSet& ps, int k) {
    if (ps.n > 14) throw Error(ErrorCode::too_large, "brute force limited to n <= 14");
    const std::size_t m = ps.n;
    const std::uint32_t full = (1u << m) - 1;
    std::vector<std::uint32_t> comparable(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const PointId ia = static_cast<PointId>(a + 1), ib = static_cast<PointId>(b + 1);
            if (a == b || ps.precedes(ia, ib) || ps.precedes(ib, ia)) comparable[a] |= 1u << b;
        }
    }
    std::vector<char> chain(full + 1, 0);
    chain[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        chain[mask] = chain[rest] && (comparable[low] & rest) == rest;
    }
    // cover[mask]: fewest chains partitioning mask.
    std::vector<std::uint8_t> cover(full + 1, 0);
    std::int64_t best = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        int c = 255;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            if (chain[sub | low]) c = std::min(c, 1 + cover[mask ^ (sub | low)]);
            if (sub == 0) break;
        }
        cover[mask] = static_cast<std::uint8_t>(c);
        if (c <= k) {
            std::int64_t w = 0;
            for (std::size_t b = 0; b < m; ++b) {
                if ((mask >> b) & 1u) w += ps.weight[b + 1];
            }
            best = std::max(best, w);
        }
    }
    return best;
}

ResidualShortestPaths residual_shortest_paths(const ResidualNetwork& net, PathMask mask) {
    const PointSet& ps = net.points();
    const std::size_t total = ps.size_with_terminals();
    const PointId s = ps.s(), t = ps.t();
    auto minus_key = [&](PointId id) -> std::uint32_t { return id == t ? 2 * id + 1 : 2 * id; };
    auto plus_key = [](PointId id) -> std::uint32_t { return 2 * id + 1; };

    // Red edges straight from the path lists; masked paths lose their edges.
    std::set<std::pair<PointId, PointId>> red_edges, masked_edges;
    std::vector<int> owner(total, -1);
    for (std::size_t j = 0; j < net.red_paths().size(); ++j) {
        const Path& p = net.red_paths()[j];
        const bool masked = (mask >> j) & 1u;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            (masked ? masked_edges : red_edges).insert({p[i], p[i + 1]});
            if (i > 0) owner[p[i]] = static_cast<int>(j);
        }
    }
    std::vector<std::vector<DagEdge>> adj(2 * total);
    for (PointId y = 0; y <= ps.n; ++y) {
        for (PointId x = 1; x <= ps.n + 1; ++x) {
            if (!ps.precedes(y, x)) continue;
            if (masked_edges.count({y, x})) continue;
            if (red_edges.count({y, x})) {
                // Reversed edges into s only close cycles.
                if (y != s) adj[minus_key(x)].push_back({plus_key(y), 0});
            } else {
                adj[plus_key(y)].push_back({minus_key(x), 0});
            }
        }
    }
    for (PointId x = 1; x <= ps.n; ++x) {
        if (owner[x] < 0) {
            adj[minus_key(x)].push_back({plus_key(x), -ps.weight[x]});
        } else if (!((mask >> owner[x]) & 1u)) {
            adj[plus_key(x)].push_back({minus_key(x), ps.weight[x]});
        }
    }
    std::vector<std::uint32_t> pred;
    ResidualShortestPaths out;
    out.dist = label_correcting(adj, plus_key(s), &pred);
    if (out.dist[plus_key(t)] == kInf) return out;
    for (std::uint32_t v = plus_key(t);; v = pred[v]) {
        out.path.push_back(v);
        if (v == plus_key(s)) break;
        if (out.path.size() > adj.size()) throw Error(ErrorCode::cyclic_pred, "oracle pred loop");
    }
    std::reverse(out.path.begin(), out.path.end());

    // Count tight s-t paths (capped at 2) through nodes that reach t on tight
    // edges; a tight cycle among those means infinitely many.
    auto tight = [&](std::uint32_t u, const DagEdge& e) {
        return out.dist[u] != kInf && out.dist[u] + e.weight == out.dist[e.to];
    };
    std::vector<std::vector<std::uint32_t>> tight_in(adj.size());
    for (std::uint32_t u = 0; u < adj.size(); ++u) {
        for (const DagEdge& e : adj[u]) {
            if (tight(u, e)) tight_in[e.to].push_back(u);
        }
    }
    std::vector<char> reaches_t(adj.size(), 0);
    std::vector<std::uint32_t> stack{plus_key(t)};
    reaches_t[plus_key(t)] = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t u : tight_in[v]) {
            if (!reaches_t[u]) {
                reaches_t[u] = 1;
                stack.push_back(u);
            }
        }
    }
    std::vector<int> state(adj.size(), 0);  // 0 new, 1 open, 2 closed
    std::vector<int> count(adj.size(), 0);
    bool cyclic = false;
    std::function<int(std::uint32_t)> paths_to_t = [&](std::uint32_t u) -> int {
        if (u == plus_key(t)) return 1;
        if (state[u] == 2) return count[u];
        if (state[u] == 1) {
            cyclic = true;
            return 0;
        }
        state[u] = 1;
        int c = 0;
        for (const DagEdge& e : adj[u]) {
            if (!tight(u, e) || !reaches_t[e.to]) continue;
            c = std::min(2, c + paths_to_t(e.to));
        }
        state[u] = 2;
        count[u] = c;
        return c;
    };
    out.unique = paths_to_t(plus_key(s)) == 1 && !cyclic;
    return out;
}

}  // namespace bcp
