#include "bcp/validate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bcp/geometry.hpp"

namespace bcp {

namespace {

struct Hop {
    std::size_t robot;
    Vec2 from, to;
    RawPoint raw_from, raw_to;
    std::int64_t beta_lo, beta_hi;
};

Rational time_of(const RawPoint& p) { return (p.alpha + p.beta) / Rational(2); }

bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    return orientation(a, b, p) == 0 && std::min(a.a, b.a) <= p.a && p.a <= std::max(a.a, b.a) &&
           std::min(a.b, b.b) <= p.b && p.b <= std::max(a.b, b.b);
}

// Earliest time at which two colliding hops share a point.
Rational meet_time(const Hop& p, const Hop& q) {
    if (orientation(p.from, p.to, q.from) == 0 && orientation(p.from, p.to, q.to) == 0) {
        std::optional<Rational> best;
        auto consider = [&](const Vec2& v, const RawPoint& raw, const Hop& other) {
            if (!on_segment(v, other.from, other.to)) return;
            Rational t = time_of(raw);
            if (!best || t < *best) best = t;
        };
        consider(p.from, p.raw_from, q);
        consider(p.to, p.raw_to, q);
        consider(q.from, q.raw_from, p);
        consider(q.to, q.raw_to, p);
        return best.value_or(time_of(p.raw_from));
    }
    try {
        // P + s (P' - P) with s = cross(Q - P, Q' - Q) / cross(P' - P, Q' - Q).
        const Rational da = p.raw_to.alpha - p.raw_from.alpha, db = p.raw_to.beta - p.raw_from.beta;
        const Rational ea = q.raw_to.alpha - q.raw_from.alpha, eb = q.raw_to.beta - q.raw_from.beta;
        const Rational fa = q.raw_from.alpha - p.raw_from.alpha, fb = q.raw_from.beta - p.raw_from.beta;
        const Rational s = (fa * eb - fb * ea) / (da * eb - db * ea);
        return time_of(p.raw_from) + s * (time_of(p.raw_to) - time_of(p.raw_from));
    } catch (const std::overflow_error&) {
        return std::max(time_of(p.raw_from), time_of(q.raw_from));
    }
}

}  // namespace

const char* violation_kind_name(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::bad_start: return "BadStart";
        case Violation::Kind::speed: return "SpeedViolation";
        case Violation::Kind::unknown_request: return "UnknownRequest";
        case Violation::Kind::duplicate_claim: return "DuplicateClaim";
        case Violation::Kind::too_many_robots: return "TooManyRobots";
        case Violation::Kind::collision: return "Collision";
    }
    return "Unknown";
}

std::string Violation::str() const {
    std::ostringstream out;
    out << violation_kind_name(kind) << " robot=" << robot;
    switch (kind) {
        case Kind::speed:
            out << " hop=" << waypoint - 1 << "->" << waypoint;
            break;
        case Kind::bad_start:
        case Kind::unknown_request:
            out << " waypoint=" << waypoint;
            break;
        case Kind::duplicate_claim:
            out << " waypoint=" << waypoint << " first=" << other;
            break;
        case Kind::too_many_robots:
            out << " limit=" << other;
            break;
        case Kind::collision:
            out << " other=" << other << " time=" << time.str();
            break;
    }
    return out.str();
}

std::size_t Report::count(Violation::Kind kind) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [&](const Violation& v) { return v.kind == kind; }));
}

std::string Report::str() const {
    std::string out;
    for (const Violation& v : violations) out += v.str() + "\n";
    return out;
}

Report check_schedule(const NormalizedInstance& inst, const std::vector<RobotSchedule>& robots) {
    Report report;
    if (robots.size() > static_cast<std::size_t>(inst.k)) {
        report.violations.push_back(
            {Violation::Kind::too_many_robots, robots.size(), static_cast<std::size_t>(inst.k), 0, 0});
    }
    std::map<std::pair<Rational, Rational>, std::size_t> request_at;
    for (std::size_t i = 0; i < inst.requests.size(); ++i) {
        request_at.emplace(std::make_pair(inst.requests[i].x, inst.requests[i].t), i);
    }
    std::map<std::size_t, std::size_t> claimed_by;
    const Waypoint origin{0, 0};
    for (std::size_t r = 0; r < robots.size(); ++r) {
        const RobotSchedule& robot = robots[r];
        if (robot.empty() || robot.front() != origin) {
            report.violations.push_back({Violation::Kind::bad_start, r, 0, 0, 0});
            continue;
        }
        for (std::size_t i = 1; i < robot.size(); ++i) {
            const Waypoint& a = robot[i - 1];
            const Waypoint& b = robot[i];
            // Only a request at the origin can be claimed without moving.
            const bool origin_claim = i == 1 && b == origin;
            const bool time_ok = origin_claim || a.t < b.t;
            if (!time_ok || abs(b.x - a.x) > b.t - a.t) {
                report.violations.push_back({Violation::Kind::speed, r, 0, i, 0});
            }
            auto it = request_at.find({b.x, b.t});
            if (it == request_at.end()) {
                report.violations.push_back({Violation::Kind::unknown_request, r, 0, i, 0});
                continue;
            }
            auto [claim, fresh] = claimed_by.emplace(it->second, r);
            if (!fresh) {
                report.violations.push_back({Violation::Kind::duplicate_claim, r, claim->second, i, 0});
            }
        }
    }
    return report;
}

Report check_noncrossing(const std::vector<RobotSchedule>& robots) {
    std::vector<RawPoint> raw;
    std::vector<std::pair<std::size_t, std::size_t>> owner;  // (robot, waypoint) per raw point
    for (std::size_t r = 0; r < robots.size(); ++r) {
        for (std::size_t i = 0; i < robots[r].size(); ++i) {
            raw.push_back(alpha_beta_transform(robots[r][i].x, robots[r][i].t));
            owner.emplace_back(r, i);
        }
    }
    const std::vector<Vec2> plane = scale_to_integers(raw);

    std::vector<Hop> hops;
    for (std::size_t p = 1; p < raw.size(); ++p) {
        if (owner[p].first != owner[p - 1].first) continue;
        if (plane[p] == plane[p - 1]) continue;  // a claim at the start point
        hops.push_back({owner[p].first, plane[p - 1], plane[p], raw[p - 1], raw[p],
                        std::min(plane[p - 1].b, plane[p].b), std::max(plane[p - 1].b, plane[p].b)});
    }
    std::sort(hops.begin(), hops.end(),
              [](const Hop& x, const Hop& y) { return x.beta_lo < y.beta_lo; });

    std::map<std::pair<std::size_t, std::size_t>, Rational> earliest;
    for (std::size_t i = 0; i < hops.size(); ++i) {
        for (std::size_t j = i + 1; j < hops.size() && hops[j].beta_lo <= hops[i].beta_hi; ++j) {
            const Hop& p = hops[i];
            const Hop& q = hops[j];
            if (p.robot == q.robot || !edges_collide(p.from, p.to, q.from, q.to)) continue;
            const auto key = std::minmax(p.robot, q.robot);
            const Rational when = meet_time(p, q);
            auto [it, fresh] = earliest.emplace(key, when);
            if (!fresh && when < it->second) it->second = when;
        }
    }
    Report report;
    for (const auto& [pair, when] : earliest) {
        report.violations.push_back({Violation::Kind::collision, pair.first, pair.second, 0, when});
    }
    return report;
}

std::int64_t total_weight(const NormalizedInstance& inst, const std::vector<RobotSchedule>& robots) {
    std::map<std::pair<Rational, Rational>, std::int64_t> weight_at;
    for (const Request& r : inst.requests) weight_at.emplace(std::make_pair(r.x, r.t), r.w);
    std::int64_t total = 0;
    for (const RobotSchedule& robot : robots) {
        for (std::size_t i = 1; i < robot.size(); ++i) {
            auto it = weight_at.find({robot[i].x, robot[i].t});
            if (it == weight_at.end()) continue;
            total += it->second;
            weight_at.erase(it);
        }
    }
    return total;
}

}  // namespace bcp
