#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bcp/geometry.hpp"

namespace bcp {

// Static-shape 2D range-minimum index: a segment tree over alpha positions
// whose nodes hold a min-tree over their points sorted by beta. Values change,
// the point set does not. Query and update are O(log^2 n).
class RangeMinIndex {
public:
    static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

    struct Entry {
        PointId id;
        std::int64_t alpha_rank;
        std::int64_t beta_rank;
        std::int64_t value;
    };
    struct Hit {
        PointId id;
        std::int64_t value;
        friend bool operator==(const Hit&, const Hit&) = default;
    };

    RangeMinIndex() = default;
    explicit RangeMinIndex(std::span<const Entry> entries);

    void update(PointId id, std::int64_t value);
    void deactivate(PointId id);
    void reactivate(PointId id);

    // Closed rectangle. Ties go to the smallest id; infinite values never match.
    std::optional<Hit> query_min(std::int64_t alpha_lo, std::int64_t alpha_hi,
                                 std::int64_t beta_lo, std::int64_t beta_hi) const;

    std::int64_t value(PointId id) const { return value_[slot(id)]; }
    bool active(PointId id) const { return active_[slot(id)] != 0; }
    bool contains(PointId id) const {
        return id < index_of_.size() && index_of_[id] != kNone;
    }
    std::size_t size() const { return ids_.size(); }

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    static constexpr std::size_t kLeafBlock = 16;

    std::uint32_t slot(PointId id) const;
    std::int64_t effective(std::uint32_t p) const {
        return active_[p] ? value_[p] : kInfinity;
    }
    std::uint32_t better(std::uint32_t a, std::uint32_t b) const;
    void pull(std::uint32_t* t, std::int64_t* tv, std::size_t v) const;
    void refresh(std::uint32_t p);
    std::uint32_t block_query(std::size_t level, std::size_t lo, std::size_t len, std::size_t from,
                              std::size_t to) const;
    std::uint32_t scan(std::size_t from, std::size_t to, std::int64_t beta_lo,
                       std::int64_t beta_hi) const;
    std::uint32_t visit(std::size_t level, std::size_t node, std::size_t pl, std::size_t pr,
                        std::size_t from, std::size_t to, std::int64_t beta_lo,
                        std::int64_t beta_hi) const;

    std::vector<PointId> ids_;
    std::vector<std::int64_t> beta_;
    std::vector<std::int64_t> value_;
    std::vector<std::uint8_t> active_;
    std::vector<std::uint32_t> index_of_;  // external id -> internal index
    std::vector<std::int64_t> sorted_alpha_;
    std::vector<std::uint32_t> by_position_;  // alpha position -> internal index
    std::vector<std::uint32_t> position_;     // internal index -> alpha position
    std::vector<std::int64_t> root_keys_;     // beta ranks in beta order
    std::size_t log_width_ = 0;
    std::size_t stored_levels_ = 0;
    // Per level, blocks of width 2^(log_width - level) in beta order. where_
    // gives each point's slot, left_ counts the slots before it in its block
    // that fall in the left half (fractional cascading for the beta range).
    std::vector<std::vector<std::uint32_t>> where_;
    std::vector<std::vector<std::uint32_t>> left_;
    std::vector<std::vector<std::uint32_t>> tree_;       // inner min-trees
    std::vector<std::vector<std::int64_t>> tree_value_;  // effective value of each tree_ winner
};

}  // namespace bcp
