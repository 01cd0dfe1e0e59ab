#include "bcp/point_set.hpp"

#include <algorithm>
#include <array>

namespace bcp {

PointSet PointSet::from_instance(const NormalizedInstance& inst) {
    PointSet ps;
    ps.n = inst.requests.size();
    const std::size_t total = ps.n + 2;

    std::vector<RawPoint> raw;
    raw.reserve(ps.n);
    for (std::size_t i = 0; i < ps.n; ++i) {
        raw.push_back(alpha_beta_transform(inst.requests[i].x, inst.requests[i].t, i));
    }
    auto grid = rank_normalize(raw);

    ps.alpha.assign(total, 0);
    ps.beta.assign(total, 0);
    ps.weight.assign(total, 0);
    ps.request.assign(total, 0);
    ps.by_alpha.assign(total, 0);
    ps.by_beta.assign(total, 0);
    for (std::size_t i = 0; i < ps.n; ++i) {
        PointId id = grid[i].id;
        ps.alpha[id] = grid[i].alpha_rank;
        ps.beta[id] = grid[i].beta_rank;
        ps.weight[id] = inst.requests[i].w;
        ps.request[id] = i;
    }
    ps.alpha[ps.t()] = ps.beta[ps.t()] = static_cast<std::int64_t>(ps.n + 1);
    for (PointId id = 0; id < total; ++id) {
        ps.by_alpha[ps.alpha[id]] = id;
        ps.by_beta[ps.beta[id]] = id;
    }

    auto scaled = scale_to_integers(raw);
    ps.plane.assign(total, Vec2{});
    std::int64_t top = 0;
    for (std::size_t i = 0; i < ps.n; ++i) {
        ps.plane[i + 1] = scaled[i];
        top = std::max({top, scaled[i].a, scaled[i].b});
    }
    ps.plane[ps.t()] = {top + 1, top + 1};
    return ps;
}

std::optional<PathCrossing> find_path_crossing(const PointSet& ps, const std::vector<Path>& paths) {
    // Chains are monotone in beta, so the edges of one path that can meet a
    // given edge form a contiguous run found by binary search on beta.
    for (std::size_t pa = 0; pa < paths.size(); ++pa) {
        for (std::size_t pb = pa + 1; pb < paths.size(); ++pb) {
            const Path& a = paths[pa];
            const Path& b = paths[pb];
            if (b.size() < 2) continue;
            std::vector<std::int64_t> ends(b.size() - 1);
            for (std::size_t e = 0; e + 1 < b.size(); ++e) ends[e] = ps.plane[b[e + 1]].b;
            for (std::size_t ea = 0; ea + 1 < a.size(); ++ea) {
                PointId u = a[ea], v = a[ea + 1];
                const std::int64_t lo = ps.plane[u].b, hi = ps.plane[v].b;
                std::size_t eb = std::lower_bound(ends.begin(), ends.end(), lo) - ends.begin();
                for (; eb < ends.size() && ps.plane[b[eb]].b <= hi; ++eb) {
                    PointId x = b[eb], y = b[eb + 1];
                    if (u == x || u == y || v == x || v == y) continue;
                    if (edges_collide(ps.plane[u], ps.plane[v], ps.plane[x], ps.plane[y])) {
                        return PathCrossing{pa, ea, pb, eb};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

NormalizedInstance instance_from_alpha_beta(const std::vector<std::array<std::int64_t, 3>>& rows,
                                            int k) {
    NormalizedInstance inst;
    inst.k = k;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Rational a(rows[i][0]), b(rows[i][1]);
        inst.requests.push_back({(a - b) / Rational(2), (a + b) / Rational(2), rows[i][2]});
        inst.merge_log.push_back({i});
    }
    return inst;
}

}  // namespace bcp
