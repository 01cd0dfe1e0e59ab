#include "bcp/plot.hpp"

#include <algorithm>
#include <cstdio>

namespace bcp {

namespace {

constexpr double kPanel = 360;
constexpr double kMargin = 40;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Frame {
    double x0;  // left edge of the panel in the image
    double lo_h, hi_h, lo_v, hi_v;

    double px(double h) const { return x0 + kMargin + (h - lo_h) / (hi_h - lo_h) * kPanel; }
    double py(double v) const { return kMargin + kPanel - (v - lo_v) / (hi_v - lo_v) * kPanel; }
};

void axes(std::string& svg, const Frame& f, const char* h_label, const char* v_label) {
    svg += "<rect class=\"frame\" x=\"" + num(f.x0 + kMargin) + "\" y=\"" + num(kMargin) +
           "\" width=\"" + num(kPanel) + "\" height=\"" + num(kPanel) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(f.x0 + kMargin + kPanel / 2) + "\" y=\"" + num(kMargin + kPanel + 28) +
           "\" text-anchor=\"middle\">" + h_label + "</text>\n";
    svg += "<text x=\"" + num(f.x0 + 12) + "\" y=\"" + num(kMargin + kPanel / 2) + "\">" + v_label +
           "</text>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const std::vector<RobotSchedule>& robots) {
    const Rational v = inst.v;
    double horizon = 1;
    std::int64_t wmax = 1;
    for (const Request& r : inst.requests) {
        horizon = std::max(horizon, static_cast<double>(r.t.to_long_double()));
        wmax = std::max(wmax, r.w);
    }
    for (const RobotSchedule& robot : robots) {
        for (const Waypoint& w : robot) horizon = std::max(horizon, static_cast<double>(w.t.to_long_double()));
    }
    const double reach = horizon * static_cast<double>(v.to_long_double());
    const Frame xt{0, -reach, reach, 0, horizon};
    const Frame ab{kPanel + 2 * kMargin, 0, 2 * horizon, 0, 2 * horizon};

    std::string svg;
    const double width = 2 * (kPanel + 2 * kMargin), height = kPanel + 2 * kMargin;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    axes(svg, xt, "x", "t");
    axes(svg, ab, "alpha", "beta");

    auto alpha_beta = [&](const Rational& x, const Rational& t) {
        const double xs = static_cast<double>((x / v).to_long_double());
        const double td = static_cast<double>(t.to_long_double());
        return std::pair{td + xs, td - xs};
    };

    for (std::size_t r = 0; r < robots.size(); ++r) {
        const bool busy = robots[r].size() > 1;
        const std::string stroke = busy ? "#c0392b" : "#888888";
        std::string pts_xt, pts_ab;
        for (const Waypoint& w : robots[r]) {
            const double xd = static_cast<double>(w.x.to_long_double());
            const double td = static_cast<double>(w.t.to_long_double());
            auto [a, b] = alpha_beta(w.x, w.t);
            pts_xt += num(xt.px(xd)) + "," + num(xt.py(td)) + " ";
            pts_ab += num(ab.px(a)) + "," + num(ab.py(b)) + " ";
        }
        if (!pts_xt.empty()) pts_xt.pop_back();
        if (!pts_ab.empty()) pts_ab.pop_back();
        const std::string attrs = "\" data-robot=\"" + std::to_string(r) + "\" fill=\"none\" stroke=\"" +
                                  stroke + "\" stroke-width=\"" + (busy ? "2" : "1") + "\" points=\"";
        svg += "<polyline class=\"robot" + std::string(busy ? " red" : "") + attrs + pts_xt + "\"/>\n";
        svg += "<polyline class=\"robot-ab" + std::string(busy ? " red" : "") + attrs + pts_ab + "\"/>\n";
    }

    for (const Request& req : inst.requests) {
        const double radius = 2 + 6 * static_cast<double>(req.w) / static_cast<double>(wmax);
        const double xd = static_cast<double>(req.x.to_long_double());
        const double td = static_cast<double>(req.t.to_long_double());
        auto [a, b] = alpha_beta(req.x, req.t);
        const std::string tail = "\" r=\"" + num(radius) + "\" data-w=\"" + std::to_string(req.w) +
                                 "\" fill=\"#2c3e50\" fill-opacity=\"0.7\"/>\n";
        svg += "<circle class=\"request\" cx=\"" + num(xt.px(xd)) + "\" cy=\"" + num(xt.py(td)) + tail;
        svg += "<circle class=\"request-ab\" cx=\"" + num(ab.px(a)) + "\" cy=\"" + num(ab.py(b)) + tail;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace bcp
