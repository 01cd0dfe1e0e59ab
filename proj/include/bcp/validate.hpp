#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcp/instance.hpp"

namespace bcp {

// Schedules are in speed-normalized units: each robot starts with the
// waypoint (0, 0) and every later waypoint claims the request at that
// (x, t). A robot with only the start waypoint is idle.

struct Violation {
    enum class Kind {
        bad_start,
        speed,
        unknown_request,
        duplicate_claim,
        too_many_robots,
        collision,
    };
    Kind kind = Kind::bad_start;
    std::size_t robot = 0;
    std::size_t other = 0;     // second robot (collision) or first claimant (duplicate)
    std::size_t waypoint = 0;  // index of the offending waypoint
    Rational time = 0;         // collision: earliest shared time

    std::string str() const;
};

const char* violation_kind_name(Violation::Kind kind);

struct Report {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::size_t count(Violation::Kind kind) const;
    // One violation per line.
    std::string str() const;
};

// Start, speed, claims and robot count.
Report check_schedule(const NormalizedInstance& inst, const std::vector<RobotSchedule>& robots);

// Pairwise collisions between the robots' location-time polylines, checked as
// alpha-beta segment intersections. Robots share the origin at time 0 and are
// out of play after their last waypoint.
Report check_noncrossing(const std::vector<RobotSchedule>& robots);

// Weight of the distinct requests claimed by some waypoint.
std::int64_t total_weight(const NormalizedInstance& inst, const std::vector<RobotSchedule>& robots);

}  // namespace bcp
