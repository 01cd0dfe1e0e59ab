#pragma once

#include <string>
#include <vector>

#include "bcp/instance.hpp"

namespace bcp {

// Two-panel SVG: location-time on the left, alpha-beta on the right.
// Requests are dots scaled by weight (class "request" / "request-ab"), robots
// are polylines (class "robot" / "robot-ab"); robots that collect something
// are drawn in red. Schedules are in the instance's own units. The output
// depends only on the inputs.
std::string render_svg(const Instance& inst, const std::vector<RobotSchedule>& robots);

}  // namespace bcp
