#include "bcp/residual.hpp"

#include <algorithm>
#include <map>

#include "bcp/error.hpp"

namespace bcp {

ResidualNetwork::ResidualNetwork(const PointSet& points, std::vector<Path> red_paths)
    : points_(&points), red_paths_(std::move(red_paths)) {
    const std::size_t total = points.size_with_terminals();
    if (red_paths_.size() >= 32) {
        throw Error(ErrorCode::too_large, "at most 31 red paths are supported");
    }
    color_.assign(total, kBlack);
    red_pred_.assign(total, 0);
    red_succ_.assign(total, 0);
    chains_.resize(red_paths_.size());
    for (std::size_t j = 0; j < red_paths_.size(); ++j) {
        const Path& p = red_paths_[j];
        if (p.size() < 3 || p.front() != s() || p.back() != t()) {
            throw Error(ErrorCode::invariant_breach, "red path " + std::to_string(j) + " is not an s-t path through a request");
        }
        for (std::size_t i = 1; i < p.size(); ++i) {
            if (!points.precedes(p[i - 1], p[i])) {
                throw Error(ErrorCode::invariant_breach, "red path " + std::to_string(j) + " is not a dominance chain");
            }
            if (i + 1 < p.size()) {
                if (color_[p[i]] != kBlack) {
                    throw Error(ErrorCode::invariant_breach, "red paths share point " + std::to_string(p[i]));
                }
                color_[p[i]] = static_cast<int>(j);
                red_pred_[p[i]] = p[i - 1];
                red_succ_[p[i]] = p[i + 1];
            }
            chains_[j].push_back(p[i]);
        }
    }
    if (auto crossing = find_path_crossing(points, red_paths_)) {
        throw Error(ErrorCode::invariant_breach,
                    "red paths " + std::to_string(crossing->path_a) + " and " +
                        std::to_string(crossing->path_b) + " cross");
    }
}

bool ResidualNetwork::has_red_edge(PointId from, PointId to) const {
    if (to != t() && to != s() && is_red(to)) return red_pred_[to] == from;
    if (to == t() && from != s() && is_red(from)) return red_succ_[from] == to;
    return false;
}

std::pair<std::size_t, std::size_t> ResidualNetwork::chain_range(std::size_t j, std::int64_t lo,
                                                                 std::int64_t hi) const {
    const auto& chain = chains_[j];
    const auto& beta = points_->beta;
    auto first = std::partition_point(chain.begin(), chain.end(),
                                      [&](PointId id) { return beta[id] <= lo; });
    auto last = std::partition_point(first, chain.end(),
                                     [&](PointId id) { return beta[id] <= hi; });
    return {static_cast<std::size_t>(first - chain.begin()),
            static_cast<std::size_t>(last - chain.begin())};
}

std::optional<std::int64_t> ResidualNetwork::edge_weight(NodeKey from, NodeKey to,
                                                         PathMask mask) const {
    const PointId u = node_point(from), v = node_point(to);
    const std::size_t total = points_->size_with_terminals();
    if (u >= total || v >= total) return std::nullopt;
    const bool u_plus = node_side(from) == Side::plus;
    const bool v_plus = node_side(to) == Side::plus;
    const PointId tt = t(), ss = s();

    if (u == v) {
        if (u == ss || u == tt) return std::nullopt;
        if (!u_plus && v_plus && !is_red(u)) return -weight(u);
        if (u_plus && !v_plus && is_red(u) && edge_active(u, mask)) return weight(u);
        return std::nullopt;
    }
    // Black long edge y+ -> x- (x may be t).
    if (u_plus && (!v_plus || v == tt) && u != tt && v != ss) {
        if (!points_->precedes(u, v)) return std::nullopt;
        if (has_red_edge(u, v)) return std::nullopt;
        // Points on a masked path keep their black long edges; the masked
        // path's own edges simply vanish.
        return 0;
    }
    // Reversed red long edge x- -> pi+ (pi regular), or t -> last+.
    if ((!u_plus || u == tt) && v_plus && v != ss && v != tt) {
        if (u == tt) {
            if (!is_red(v) || red_succ(v) != tt || !edge_active(v, mask)) return std::nullopt;
            return 0;
        }
        if (!is_red(u) || red_pred(u) != v || !edge_active(u, mask)) return std::nullopt;
        return 0;
    }
    return std::nullopt;
}

SubNetworkView subnetwork(const ResidualNetwork& net, std::int64_t beta_lo, std::int64_t beta_hi) {
    const auto top = static_cast<std::int64_t>(net.n() + 1);
    if (beta_lo < 0 || beta_lo > beta_hi || beta_hi > top) {
        throw Error(ErrorCode::invalid_interval,
                    "(" + std::to_string(beta_lo) + ", " + std::to_string(beta_hi) + "]");
    }
    return {beta_lo, beta_hi};
}

SubNetworkView full_view(const ResidualNetwork& net) {
    return {0, static_cast<std::int64_t>(net.n() + 1)};
}

RelaxState init_arrays(const ResidualNetwork& net) {
    const std::size_t total = net.points().size_with_terminals();
    RelaxState st;
    st.h.assign(2 * total, RelaxState::kInfinity);
    st.pred.assign(2 * total, 0);
    const NodeKey s = plus_node(net.s());
    st.h[s] = 0;
    st.pred[s] = s;
    for (PointId x = 1; x <= net.n(); ++x) {
        const NodeKey xm = net.minus_node(x), xp = plus_node(x);
        if (!net.is_red(x)) {
            st.h[xm] = 0;
            st.pred[xm] = s;
            st.h[xp] = -net.weight(x);
            st.pred[xp] = xm;
        }
    }
    st.h[plus_node(net.t())] = 0;
    st.pred[plus_node(net.t())] = s;
    // Red edge (x-, y+) in residual form, i.e. path edge y -> x with y regular.
    for (const Path& p : net.red_paths()) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            const PointId x = p[i];
            const PointId y = p[i - 1];
            if (y == net.s()) {
                st.h[net.minus_node(x)] = net.weight(x);
                st.pred[net.minus_node(x)] = plus_node(x);
            } else {
                st.h[net.minus_node(x)] = 0;
                st.pred[net.minus_node(x)] = s;
                st.h[plus_node(y)] = 0;
                st.pred[plus_node(y)] = net.minus_node(x);
            }
        }
        const PointId last = p[p.size() - 2];
        st.h[plus_node(last)] = 0;
        st.pred[plus_node(last)] = plus_node(net.t());
    }
    return st;
}

bool relax(RelaxState& state, NodeKey from, NodeKey to, std::int64_t edge_weight) {
    const std::int64_t base = state.h[from];
    if (base == RelaxState::kInfinity) return false;
    if (state.h[to] > base + edge_weight) {
        state.h[to] = base + edge_weight;
        state.pred[to] = from;
        return true;
    }
    return false;
}

RangeMinIndex build_index(const ResidualNetwork& net, const RelaxState& state) {
    const PointSet& ps = net.points();
    std::vector<RangeMinIndex::Entry> entries;
    entries.reserve(ps.n + 1);
    for (PointId id = 0; id <= ps.n; ++id) {
        entries.push_back({id, ps.alpha[id], ps.beta[id], state.h_plus(id)});
    }
    return RangeMinIndex(entries);
}

bool Relaxer::relax(NodeKey from, NodeKey to, std::int64_t weight) {
    if (trace_) {
        TraceEvent ev;
        ev.kind = TraceEvent::Kind::edge;
        ev.from = from;
        ev.to = to;
        trace_->push_back(std::move(ev));
    }
    return apply(from, to, weight);
}

bool Relaxer::apply(NodeKey from, NodeKey to, std::int64_t weight) {
    if (!bcp::relax(state_, from, to, weight)) return false;
    const PointId id = node_point(to);
    if (node_side(to) == Side::plus && id != net_.t() && id != net_.s()) {
        index_.update(id, state_.h[to]);
    }
    return true;
}

bool Relaxer::big_relax(PointId x, const SubNetworkView& view, PathMask mask) {
    const PointSet& ps = net_.points();
    const PointId t = net_.t();
    const std::int64_t beta_lo = view.beta_lo == 0 ? 0 : view.beta_lo + 1;
    const std::int64_t beta_hi = ps.beta[x] - 1;
    const std::int64_t alpha_hi = ps.alpha[x] - 1;
    const NodeKey xm = net_.minus_node(x);

    // The red predecessors of x are not black neighbours, so they leave the
    // index for the duration of the query.
    PointId single_pred = 0;
    bool has_pred = false;
    if (x == t) {
        for (std::size_t j = 0; j < net_.red_count(); ++j) index_.deactivate(net_.last_on_path(j));
    } else if (net_.is_red(x)) {
        single_pred = net_.red_pred(x);
        has_pred = true;
        index_.deactivate(single_pred);
    }
    std::optional<RangeMinIndex::Hit> hit;
    if (beta_lo <= beta_hi && alpha_hi >= 0) {
        hit = index_.query_min(0, alpha_hi, beta_lo, beta_hi);
        ++queries_;
        if (trace_) {
            TraceEvent ev;
            ev.kind = TraceEvent::Kind::rect;
            ev.target = x;
            ev.to = xm;
            ev.alpha_hi = alpha_hi;
            ev.beta_lo = beta_lo;
            ev.beta_hi = beta_hi;
            if (x == t) {
                for (std::size_t j = 0; j < net_.red_count(); ++j) ev.excluded.push_back(net_.last_on_path(j));
            } else if (has_pred) {
                ev.excluded.push_back(single_pred);
            }
            trace_->push_back(std::move(ev));
        }
    }
    if (x == t) {
        for (std::size_t j = 0; j < net_.red_count(); ++j) index_.reactivate(net_.last_on_path(j));
    } else if (has_pred) {
        index_.reactivate(single_pred);
    }

    bool changed = false;
    if (hit) changed |= apply(plus_node(hit->id), xm, 0);  // covered by the rect event
    if (x == t) {
        for (std::size_t j = 0; j < net_.red_count(); ++j) {
            if ((mask >> j) & 1u) continue;
            changed |= relax(plus_node(t), plus_node(net_.last_on_path(j)), 0);
        }
    } else if (!net_.is_red(x)) {
        changed |= relax(xm, plus_node(x), -net_.weight(x));
    } else if (!((mask >> net_.color(x)) & 1u) && single_pred != net_.s()) {
        changed |= relax(xm, plus_node(single_pred), 0);
    }
    return changed;
}

void big_relax(RelaxState& state, RangeMinIndex& index, PointId x, const SubNetworkView& view,
               const ResidualNetwork& net, PathMask mask) {
    Relaxer(net, state, index).big_relax(x, view, mask);
}

std::vector<NodeKey> extract_path(const RelaxState& state, const ResidualNetwork& net) {
    const NodeKey s = plus_node(net.s());
    const std::size_t limit = state.h.size() + 1;
    std::vector<NodeKey> path;
    std::vector<char> seen(state.h.size(), 0);
    NodeKey cur = plus_node(net.t());
    while (true) {
        if (seen[cur]) throw Error(ErrorCode::cyclic_pred, "pred revisits node " + std::to_string(cur));
        seen[cur] = 1;
        path.push_back(cur);
        if (cur == s) break;
        cur = state.pred[cur];
        if (path.size() > limit) throw Error(ErrorCode::cyclic_pred, "pred chain too long");
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::int64_t path_weight(const ResidualNetwork& net, const std::vector<NodeKey>& path) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto w = net.edge_weight(path[i], path[i + 1]);
        if (!w) {
            throw Error(ErrorCode::not_a_path, "no residual edge " + std::to_string(path[i]) + " -> " +
                                                   std::to_string(path[i + 1]));
        }
        total += *w;
    }
    return total;
}

std::vector<Path> augment(const ResidualNetwork& net, const std::vector<NodeKey>& path) {
    const PointId s = net.s(), t = net.t();
    if (path.size() < 2 || path.front() != plus_node(s) || path.back() != plus_node(t)) {
        throw Error(ErrorCode::not_a_path, "path must run from s to t");
    }
    // Flow edges as a multiset keyed by (from, to); s -> t may repeat.
    std::map<std::pair<PointId, PointId>, int> flow;
    for (const Path& p : net.red_paths()) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) ++flow[{p[i], p[i + 1]}];
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const NodeKey a = path[i], b = path[i + 1];
        if (!net.edge_weight(a, b)) {
            throw Error(ErrorCode::not_a_path, "no residual edge " + std::to_string(a) + " -> " + std::to_string(b));
        }
        const PointId u = node_point(a), v = node_point(b);
        if (u == v) continue;  // short edge: node usage follows from the long edges
        const bool forward = node_side(a) == Side::plus && u != t;
        if (forward) {
            ++flow[{u, v}];
        } else {
            auto it = flow.find({v, u});
            if (it == flow.end()) throw Error(ErrorCode::not_a_path, "cancels a missing red edge");
            if (--it->second == 0) flow.erase(it);
        }
    }
    std::vector<std::vector<PointId>> out_edges(net.points().size_with_terminals());
    std::vector<int> in_degree(out_edges.size(), 0);
    for (const auto& [edge, count] : flow) {
        for (int c = 0; c < count; ++c) {
            out_edges[edge.first].push_back(edge.second);
            ++in_degree[edge.second];
        }
    }
    for (PointId x = 1; x <= net.n(); ++x) {
        if (out_edges[x].size() > 1 || in_degree[x] > 1 ||
            out_edges[x].size() != static_cast<std::size_t>(in_degree[x])) {
            throw Error(ErrorCode::not_a_path, "augmented flow is not node-disjoint at " + std::to_string(x));
        }
    }
    std::vector<Path> paths;
    for (PointId first : out_edges[s]) {
        Path p{s};
        PointId cur = first;
        while (cur != t) {
            p.push_back(cur);
            if (out_edges[cur].empty() || p.size() > out_edges.size()) {
                throw Error(ErrorCode::not_a_path, "flow path does not reach t");
            }
            cur = out_edges[cur][0];
        }
        p.push_back(t);
        paths.push_back(std::move(p));
    }
    return paths;
}

}  // namespace bcp
