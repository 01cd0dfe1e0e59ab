#include "bcp/solver.hpp"
#include "bcp/validate.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bcp;
using namespace bcp::testing;

namespace {

Waypoint wp(Rational x, Rational t) { return {x, t}; }

}  // namespace

TEST_CASE("valid chain") {
    auto inst = normalize_instance(three_requests(1));
    std::vector<RobotSchedule> robots{{wp(0, 0), wp(0, 1), wp(-1, 2)}};
    CHECK(check_schedule(inst, robots).ok());
    CHECK(check_noncrossing(robots).ok());
    CHECK(total_weight(inst, robots) == 4);
}

TEST_CASE("speed violation") {
    auto inst = normalize_instance(three_requests(1));
    std::vector<RobotSchedule> robots{{wp(0, 0), wp(0, 1), wp(2, 2)}};
    Report r = check_schedule(inst, robots);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::speed);
    CHECK(r.violations[0].waypoint == 2);
    CHECK(r.str() == "SpeedViolation robot=0 hop=1->2\n");
}

TEST_CASE("other schedule violations") {
    auto inst = normalize_instance(three_requests(1));
    std::vector<RobotSchedule> late{{wp(0, 1)}};
    CHECK(check_schedule(inst, late).count(Violation::Kind::bad_start) == 1);

    std::vector<RobotSchedule> stranger{{wp(0, 0), wp(0, 2)}};
    CHECK(check_schedule(inst, stranger).count(Violation::Kind::unknown_request) == 1);

    std::vector<RobotSchedule> twice{{wp(0, 0), wp(0, 1)}, {wp(0, 0), wp(0, 1)}};
    Report r = check_schedule(inst, twice);
    CHECK(r.count(Violation::Kind::duplicate_claim) == 1);
    CHECK(r.count(Violation::Kind::too_many_robots) == 1);
    CHECK(total_weight(inst, twice) == 2);
}

TEST_CASE("nothing collected") {
    auto inst = normalize_instance(three_requests(2));
    std::vector<RobotSchedule> idle{{wp(0, 0)}, {wp(0, 0)}};
    CHECK(check_schedule(inst, idle).ok());
    CHECK(check_noncrossing(idle).ok());
    CHECK(total_weight(inst, idle) == 0);
}

TEST_CASE("robots on disjoint half-lines") {
    std::vector<RobotSchedule> robots{{wp(0, 0), wp(-1, 2), wp(-3, 5)}, {wp(0, 0), wp(1, 2), wp(3, 5)}};
    CHECK(check_noncrossing(robots).ok());
}

TEST_CASE("mirrored crossing is caught at the meet time") {
    // One robot goes left then right, its mirror image right then left; they
    // meet at x = 0, t = 4.
    std::vector<RobotSchedule> robots{{wp(0, 0), wp(-2, 2), wp(2, 6)}, {wp(0, 0), wp(2, 2), wp(-2, 6)}};
    Report r = check_noncrossing(robots);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::collision);
    CHECK(r.violations[0].robot == 0);
    CHECK(r.violations[0].other == 1);
    CHECK(r.violations[0].time == Rational(4));
    CHECK(r.str() == "Collision robot=0 other=1 time=4\n");
}

TEST_CASE("fractional meet time") {
    std::vector<RobotSchedule> robots{{wp(0, 0), wp(-1, 1), wp(Rational(1), 3)},
                                      {wp(0, 0), wp(Rational(1, 2), Rational(1, 2)), wp(-2, 3)}};
    Report r = check_noncrossing(robots);
    REQUIRE(r.violations.size() == 1);
    // x1 = -1 + (t - 1), x2 = 1/2 - (t - 1/2): equal at t = 3/2.
    CHECK(r.violations[0].time == Rational(3, 2));
}

TEST_CASE("solver output is certified") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int k = 1 + static_cast<int>(seed % 4);
        auto inst = normalize_instance(generate_random(seed, 1 + seed % 60, 20, 9, k));
        Solution sol = solve(inst);
        CHECK(check_schedule(inst, sol.schedules).ok());
        CHECK(check_noncrossing(sol.schedules).ok());
        CHECK(total_weight(inst, sol.schedules) == sol.weight);
    }
}
