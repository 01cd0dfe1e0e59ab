#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcp/rational.hpp"

namespace bcp {

struct Request {
    Rational x;
    Rational t;
    std::int64_t w = 0;
    friend bool operator==(const Request&, const Request&) = default;
};

struct Instance {
    std::vector<Request> requests;
    int k = 1;
    Rational v = 1;
    friend bool operator==(const Instance&, const Instance&) = default;
};

// Speed scaled to 1, unreachable requests dropped, coincident requests merged.
struct NormalizedInstance {
    std::vector<Request> requests;
    int k = 1;
    Rational speed = 1;  // original v, needed to map schedules back
    std::vector<std::vector<std::size_t>> merge_log;  // per request: raw indices
    std::int64_t dropped_weight = 0;

    std::int64_t total_weight() const;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

NormalizedInstance normalize_instance(const Instance& inst);
// Speed-1 instance holding exactly the normalized requests.
Instance as_instance(const NormalizedInstance& norm);

// Integer requests with t in [0, time_horizon], x in [-t, t], w in [0, weight_max].
Instance generate_random(std::uint64_t seed, std::size_t n, std::int64_t time_horizon,
                         std::int64_t weight_max, int k);

struct Waypoint {
    Rational x;
    Rational t;
    friend bool operator==(const Waypoint&, const Waypoint&) = default;
};
using RobotSchedule = std::vector<Waypoint>;

struct ScheduleFile {
    std::vector<RobotSchedule> robots;
    std::optional<std::int64_t> weight;
};

std::string serialize_schedules(const std::vector<RobotSchedule>& robots, std::int64_t weight);
ScheduleFile parse_schedules(std::string_view text);

// Multiply (divide) every waypoint location by the speed.
std::vector<RobotSchedule> scale_locations(const std::vector<RobotSchedule>& robots,
                                           const Rational& factor);

}  // namespace bcp
