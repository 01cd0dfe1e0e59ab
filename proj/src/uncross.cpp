#include "bcp/uncross.hpp"

#include <algorithm>

#include "bcp/error.hpp"

namespace bcp {

namespace {

// Max-beta segment tree over points in alpha order; removed slots hold -1.
class FirstAbove {
public:
    explicit FirstAbove(std::vector<std::int64_t> values) : size_(1) {
        while (size_ < values.size()) size_ <<= 1;
        tree_.assign(2 * size_, -1);
        for (std::size_t i = 0; i < values.size(); ++i) tree_[size_ + i] = values[i];
        for (std::size_t v = size_ - 1; v >= 1; --v) tree_[v] = std::max(tree_[2 * v], tree_[2 * v + 1]);
    }

    void erase(std::size_t i) {
        std::size_t v = size_ + i;
        tree_[v] = -1;
        for (v >>= 1; v >= 1; v >>= 1) tree_[v] = std::max(tree_[2 * v], tree_[2 * v + 1]);
    }

    // Smallest position >= from whose value is >= bound, or npos.
    std::size_t find(std::size_t from, std::int64_t bound) const { return find(1, 0, size_, from, bound); }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t find(std::size_t v, std::size_t lo, std::size_t hi, std::size_t from,
                     std::int64_t bound) const {
        if (hi <= from || tree_[v] < bound) return npos;
        if (hi - lo == 1) return lo;
        std::size_t mid = (lo + hi) / 2;
        std::size_t left = find(2 * v, lo, mid, from, bound);
        return left != npos ? left : find(2 * v + 1, mid, hi, from, bound);
    }

    std::size_t size_;
    std::vector<std::int64_t> tree_;
};

// Inside or on the triangle x, x', (alpha_x', beta_x) below the edge.
bool in_lower_triangle(Vec2 x, Vec2 xp, Vec2 v) {
    if (v.a < x.a || v.a > xp.a || v.b < x.b || v.b > xp.b) return false;
    return orientation(x, xp, v) <= 0;
}

}  // namespace

std::vector<Path> selection_S(const PointSet& ps, std::span<const PointId> points, std::size_t j) {
    std::vector<PointId> order(points.begin(), points.end());
    std::sort(order.begin(), order.end(),
              [&](PointId a, PointId b) { return ps.alpha[a] < ps.alpha[b]; });
    std::vector<std::int64_t> betas(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) betas[i] = ps.beta[order[i]];
    FirstAbove tree(std::move(betas));

    std::size_t left = order.size();
    std::vector<Path> paths;
    for (std::size_t round = 0; round < j; ++round) {
        Path path{ps.s()};
        std::size_t from = 0;
        std::int64_t bound = 0;
        while (true) {
            std::size_t pos = tree.find(from, bound);
            if (pos == FirstAbove::npos) break;
            path.push_back(order[pos]);
            tree.erase(pos);
            --left;
            from = pos + 1;
            bound = ps.beta[order[pos]];
        }
        path.push_back(ps.t());
        paths.push_back(std::move(path));
    }
    if (left != 0) {
        throw Error(ErrorCode::uncoverable, std::to_string(left) + " points left after " +
                                                std::to_string(j) + " greedy chains");
    }
    return paths;
}

UjResult algorithm_Uj(const PointSet& ps, std::span<const PointId> points, std::size_t j) {
    if (j == 0) {
        if (!points.empty()) throw Error(ErrorCode::uncoverable, "points left for zero paths");
        return {};
    }
    auto greedy = selection_S(ps, points, j);
    const Path& rightmost = greedy.back();

    std::vector<PointId> others;
    for (std::size_t i = 0; i + 1 < greedy.size(); ++i) {
        for (std::size_t q = 1; q + 1 < greedy[i].size(); ++q) others.push_back(greedy[i][q]);
    }
    std::sort(others.begin(), others.end(),
              [&](PointId a, PointId b) { return ps.beta[a] < ps.beta[b]; });
    std::vector<char> absorbed(others.size(), 0);

    UjResult out;
    out.path.push_back(ps.s());
    std::vector<PlanePoint> triangle;
    for (std::size_t e = 0; e + 1 < rightmost.size(); ++e) {
        const PointId x = rightmost[e], xp = rightmost[e + 1];
        const Vec2 px = ps.plane[x], pxp = ps.plane[xp];
        auto first = std::partition_point(others.begin(), others.end(),
                                          [&](PointId v) { return ps.beta[v] < ps.beta[x]; });
        triangle.clear();
        for (auto it = first; it != others.end() && ps.beta[*it] <= ps.beta[xp]; ++it) {
            if (in_lower_triangle(px, pxp, ps.plane[*it])) triangle.push_back(ps.plane_point(*it));
        }
        if (triangle.empty()) {
            out.path.push_back(xp);  // operation A
            continue;
        }
        // Operation B: splice the hull chain. A request at the origin shares
        // s's position; the hull breaks that tie by id, so s still leads.
        triangle.push_back(ps.plane_point(x));
        triangle.push_back(ps.plane_point(xp));
        auto chain = dominance_hull_chain(triangle);
        if (chain.front().id != x || chain.back().id != xp) {
            throw Error(ErrorCode::invariant_breach, "hull chain does not span the edge");
        }
        for (std::size_t c = 1; c < chain.size(); ++c) {
            if (!ps.precedes(chain[c - 1].id, chain[c].id)) {
                throw Error(ErrorCode::invariant_breach, "hull chain is not a dominance chain");
            }
            if (c + 1 < chain.size()) {
                auto pos = std::partition_point(others.begin(), others.end(), [&](PointId v) {
                    return ps.beta[v] < ps.beta[chain[c].id];
                });
                absorbed[pos - others.begin()] = 1;
            }
            out.path.push_back(chain[c].id);
        }
    }
    for (std::size_t i = 0; i < others.size(); ++i) {
        if (!absorbed[i]) out.remaining.push_back(others[i]);
    }
    return out;
}

std::vector<Path> algorithm_Utilde(const PointSet& ps, std::span<const PointId> points,
                                   std::size_t k) {
    std::vector<Path> right_to_left;
    std::vector<PointId> rest(points.begin(), points.end());
    for (std::size_t j = k; j >= 1; --j) {
        UjResult r = algorithm_Uj(ps, rest, j);
        right_to_left.push_back(std::move(r.path));
        rest = std::move(r.remaining);
    }
    if (!rest.empty()) throw Error(ErrorCode::invariant_breach, "U_1 left points uncovered");
    return {right_to_left.rbegin(), right_to_left.rend()};
}

std::vector<Path> uncross_edges(const PointSet& ps, std::vector<Path> paths, std::size_t i,
                                std::size_t j, std::size_t edge_a, std::size_t edge_b) {
    Path& a = paths.at(i);
    Path& b = paths.at(j);
    if (i == j || edge_a + 1 >= a.size() || edge_b + 1 >= b.size()) {
        throw Error(ErrorCode::not_crossing, "edge indices out of range");
    }
    const PointId u = a[edge_a], up = a[edge_a + 1], x = b[edge_b], xp = b[edge_b + 1];
    if (u == x || u == xp || up == x || up == xp ||
        !closed_segments_intersect(ps.plane[u], ps.plane[up], ps.plane[x], ps.plane[xp])) {
        throw Error(ErrorCode::not_crossing, "edges do not cross");
    }
    Path na(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(edge_a) + 1);
    na.insert(na.end(), b.begin() + static_cast<std::ptrdiff_t>(edge_b) + 1, b.end());
    Path nb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(edge_b) + 1);
    nb.insert(nb.end(), a.begin() + static_cast<std::ptrdiff_t>(edge_a) + 1, a.end());
    a = std::move(na);
    b = std::move(nb);
    return paths;
}

}  // namespace bcp
