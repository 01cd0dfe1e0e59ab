#include "bcp/rangemin.hpp"

#include <algorithm>
#include <numeric>

#include "bcp/error.hpp"

namespace bcp {

RangeMinIndex::RangeMinIndex(std::span<const Entry> entries) {
    const std::size_t m = entries.size();
    ids_.resize(m);
    beta_.resize(m);
    value_.resize(m);
    active_.assign(m, 1);
    std::vector<std::int64_t> alpha(m);
    PointId max_id = 0;
    for (std::size_t i = 0; i < m; ++i) {
        ids_[i] = entries[i].id;
        alpha[i] = entries[i].alpha_rank;
        beta_[i] = entries[i].beta_rank;
        value_[i] = entries[i].value;
        max_id = std::max(max_id, entries[i].id);
    }
    index_of_.assign(m == 0 ? 0 : static_cast<std::size_t>(max_id) + 1, kNone);
    for (std::size_t i = 0; i < m; ++i) {
        if (index_of_[ids_[i]] != kNone) {
            throw Error(ErrorCode::duplicate_point, "id " + std::to_string(ids_[i]) + " listed twice");
        }
        index_of_[ids_[i]] = static_cast<std::uint32_t>(i);
    }

    by_position_.resize(m);
    std::iota(by_position_.begin(), by_position_.end(), 0u);
    std::sort(by_position_.begin(), by_position_.end(),
              [&](std::uint32_t a, std::uint32_t b) { return alpha[a] < alpha[b]; });
    sorted_alpha_.resize(m);
    position_.resize(m);
    for (std::size_t p = 0; p < m; ++p) {
        sorted_alpha_[p] = alpha[by_position_[p]];
        position_[by_position_[p]] = static_cast<std::uint32_t>(p);
        if (p > 0 && sorted_alpha_[p] == sorted_alpha_[p - 1]) {
            throw Error(ErrorCode::duplicate_rank, "alpha rank " + std::to_string(sorted_alpha_[p]));
        }
    }

    std::vector<std::uint32_t> level(m);
    std::iota(level.begin(), level.end(), 0u);
    std::sort(level.begin(), level.end(),
              [&](std::uint32_t a, std::uint32_t b) { return beta_[a] < beta_[b]; });
    for (std::size_t i = 1; i < m; ++i) {
        if (beta_[level[i]] == beta_[level[i - 1]]) {
            throw Error(ErrorCode::duplicate_rank, "beta rank " + std::to_string(beta_[level[i]]));
        }
    }

    log_width_ = 0;
    while ((std::size_t{1} << log_width_) < m) ++log_width_;
    stored_levels_ = 0;
    while (stored_levels_ <= log_width_ && (std::size_t{1} << (log_width_ - stored_levels_)) > kLeafBlock) {
        ++stored_levels_;
    }
    root_keys_.resize(m);
    for (std::size_t i = 0; i < m; ++i) root_keys_[i] = beta_[level[i]];

    // Each level's slot list is the previous one stably partitioned by block.
    where_.assign(stored_levels_, std::vector<std::uint32_t>(m));
    left_.assign(stored_levels_, {});
    tree_.assign(stored_levels_, {});
    tree_value_.assign(stored_levels_, {});
    for (std::size_t l = 0; l < stored_levels_; ++l) {
        const std::size_t shift = log_width_ - l;
        const std::size_t width = std::size_t{1} << shift;
        if (l > 0) {
            std::vector<std::uint32_t> next(m);
            std::vector<std::size_t> fill((m + width - 1) / width);
            for (std::size_t b = 0; b < fill.size(); ++b) fill[b] = b * width;
            for (std::uint32_t p : level) next[fill[position_[p] >> shift]++] = p;
            level = std::move(next);
        }
        for (std::size_t i = 0; i < m; ++i) where_[l][level[i]] = static_cast<std::uint32_t>(i);
        auto& left = left_[l];
        left.resize(m);
        for (std::size_t lo = 0; lo < m; lo += width) {
            std::uint32_t count = 0;
            for (std::size_t i = lo; i < std::min(lo + width, m); ++i) {
                left[i] = count;
                count += ((position_[level[i]] >> (shift - 1)) & 1u) == 0;
            }
        }
        auto& tree = tree_[l];
        auto& tval = tree_value_[l];
        tree.assign(2 * m, kNone);
        tval.assign(2 * m, kInfinity);
        for (std::size_t lo = 0; lo < m; lo += width) {
            const std::size_t len = std::min(width, m - lo);
            std::uint32_t* t = tree.data() + 2 * lo;
            std::int64_t* tv = tval.data() + 2 * lo;
            for (std::size_t i = 0; i < len; ++i) {
                t[len + i] = level[lo + i];
                tv[len + i] = effective(t[len + i]);
            }
            for (std::size_t v = len - 1; v >= 1; --v) pull(t, tv, v);
        }
    }
}

std::uint32_t RangeMinIndex::slot(PointId id) const {
    if (id >= index_of_.size() || index_of_[id] == kNone) {
        throw Error(ErrorCode::unknown_id, "id " + std::to_string(id));
    }
    return index_of_[id];
}

std::uint32_t RangeMinIndex::better(std::uint32_t a, std::uint32_t b) const {
    if (a == kNone) return b;
    if (b == kNone) return a;
    std::int64_t va = effective(a), vb = effective(b);
    if (va != vb) return va < vb ? a : b;
    return ids_[a] < ids_[b] ? a : b;
}

void RangeMinIndex::pull(std::uint32_t* t, std::int64_t* tv, std::size_t v) const {
    const std::size_t a = 2 * v, b = 2 * v + 1;
    const bool left = t[b] == kNone || (t[a] != kNone && (tv[a] != tv[b] ? tv[a] < tv[b] : ids_[t[a]] < ids_[t[b]]));
    t[v] = left ? t[a] : t[b];
    tv[v] = left ? tv[a] : tv[b];
}

void RangeMinIndex::refresh(std::uint32_t p) {
    const std::size_t m = ids_.size();
    const std::int64_t value = effective(p);
    for (std::size_t l = 0; l < stored_levels_; ++l) {
        const std::size_t shift = log_width_ - l;
        const std::size_t at = where_[l][p];
        const std::size_t lo = (at >> shift) << shift;
        const std::size_t len = std::min(std::size_t{1} << shift, m - lo);
        std::uint32_t* t = tree_[l].data() + 2 * lo;
        std::int64_t* tv = tree_value_[l].data() + 2 * lo;
        tv[len + at - lo] = value;
        for (std::size_t v = (len + at - lo) >> 1; v >= 1; v >>= 1) pull(t, tv, v);
    }
}

void RangeMinIndex::update(PointId id, std::int64_t value) {
    std::uint32_t p = slot(id);
    value_[p] = value;
    refresh(p);
}

void RangeMinIndex::deactivate(PointId id) {
    std::uint32_t p = slot(id);
    active_[p] = 0;
    refresh(p);
}

void RangeMinIndex::reactivate(PointId id) {
    std::uint32_t p = slot(id);
    active_[p] = 1;
    refresh(p);
}

std::uint32_t RangeMinIndex::block_query(std::size_t level, std::size_t lo, std::size_t len,
                                         std::size_t from, std::size_t to) const {
    const std::uint32_t* t = tree_[level].data() + 2 * lo;
    const std::int64_t* tv = tree_value_[level].data() + 2 * lo;
    std::uint32_t best = kNone;
    std::int64_t best_value = kInfinity;
    auto take = [&](std::size_t v) {
        if (t[v] == kNone) return;
        if (best == kNone || tv[v] < best_value || (tv[v] == best_value && ids_[t[v]] < ids_[best])) {
            best = t[v];
            best_value = tv[v];
        }
    };
    for (std::size_t l = from + len, r = to + len; l < r; l >>= 1, r >>= 1) {
        if (l & 1) take(l++);
        if (r & 1) take(--r);
    }
    return best;
}

std::uint32_t RangeMinIndex::scan(std::size_t from, std::size_t to, std::int64_t beta_lo,
                                  std::int64_t beta_hi) const {
    std::uint32_t best = kNone;
    for (std::size_t pos = from; pos < to; ++pos) {
        std::uint32_t p = by_position_[pos];
        if (beta_[p] >= beta_lo && beta_[p] <= beta_hi) best = better(best, p);
    }
    return best;
}

// [from, to) is the beta range as offsets into this node's block.
std::uint32_t RangeMinIndex::visit(std::size_t level, std::size_t node, std::size_t pl,
                                   std::size_t pr, std::size_t from, std::size_t to,
                                   std::int64_t beta_lo, std::int64_t beta_hi) const {
    const std::size_t shift = log_width_ - level;
    const std::size_t lo = node << shift;
    const std::size_t hi = std::min(lo + (std::size_t{1} << shift), ids_.size());
    if (lo >= hi || hi <= pl || lo >= pr || from >= to) return kNone;
    if (level >= stored_levels_) {
        return scan(std::max(lo, pl), std::min(hi, pr), beta_lo, beta_hi);
    }
    if (pl <= lo && hi <= pr) return block_query(level, lo, hi - lo, from, to);
    const std::size_t half = std::size_t{1} << (shift - 1);
    auto left_before = [&](std::size_t i) -> std::size_t {
        return i < hi - lo ? left_[level][lo + i] : std::min(half, hi - lo);
    };
    const std::size_t lf = left_before(from), lt = left_before(to);
    return better(visit(level + 1, 2 * node, pl, pr, lf, lt, beta_lo, beta_hi),
                  visit(level + 1, 2 * node + 1, pl, pr, from - lf, to - lt, beta_lo, beta_hi));
}

std::optional<RangeMinIndex::Hit> RangeMinIndex::query_min(std::int64_t alpha_lo,
                                                           std::int64_t alpha_hi,
                                                           std::int64_t beta_lo,
                                                           std::int64_t beta_hi) const {
    if (alpha_lo > alpha_hi || beta_lo > beta_hi || ids_.empty()) return std::nullopt;
    std::size_t pl = std::lower_bound(sorted_alpha_.begin(), sorted_alpha_.end(), alpha_lo) -
                     sorted_alpha_.begin();
    std::size_t pr = std::upper_bound(sorted_alpha_.begin(), sorted_alpha_.end(), alpha_hi) -
                     sorted_alpha_.begin();
    if (pl >= pr) return std::nullopt;
    std::size_t from = std::lower_bound(root_keys_.begin(), root_keys_.end(), beta_lo) - root_keys_.begin();
    std::size_t to = std::upper_bound(root_keys_.begin(), root_keys_.end(), beta_hi) - root_keys_.begin();
    std::uint32_t best = visit(0, 0, pl, pr, from, to, beta_lo, beta_hi);
    if (best == kNone || effective(best) == kInfinity) return std::nullopt;
    return Hit{ids_[best], value_[best]};
}

}  // namespace bcp
