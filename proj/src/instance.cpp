#include "bcp/instance.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bcp/error.hpp"

namespace bcp {

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
        i = j;
    }
    return out;
}

std::string_view strip_comment(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) return line.substr(0, hash);
    return line;
}

Rational rational_at(const Token& tok, int line) {
    try {
        return Rational::parse(tok.text);
    } catch (const std::exception& e) {
        throw ParseError(ErrorCode::syntax_error, line, tok.column, e.what());
    }
}

std::int64_t integer_at(const Token& tok, int line) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError(ErrorCode::syntax_error, line, tok.column,
                         "expected integer, got '" + std::string(tok.text) + "'");
    }
    return v;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    // Uniform in [0, bound) by rejection; avoids library-specific distributions.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

std::int64_t draw_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace

std::int64_t NormalizedInstance::total_weight() const {
    std::int64_t sum = 0;
    for (const Request& r : requests) sum += r.w;
    return sum;
}

Instance parse_instance(std::string_view text) {
    Instance inst;
    bool have_header = false;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li + 1);
        auto toks = tokenize(strip_comment(lines[li]));
        if (toks.empty()) continue;
        if (!have_header) {
            bool have_k = false, have_v = false;
            for (const Token& tok : toks) {
                if (tok.text.starts_with("k=")) {
                    Token val{tok.text.substr(2), tok.column + 2};
                    inst.k = static_cast<int>(integer_at(val, line_no));
                    if (inst.k < 1) {
                        throw ParseError(ErrorCode::syntax_error, line_no, val.column, "k must be >= 1");
                    }
                    have_k = true;
                } else if (tok.text.starts_with("v=")) {
                    Token val{tok.text.substr(2), tok.column + 2};
                    inst.v = rational_at(val, line_no);
                    if (inst.v <= Rational(0)) {
                        throw ParseError(ErrorCode::non_positive_speed, line_no, val.column,
                                         "speed must be positive");
                    }
                    have_v = true;
                } else {
                    throw ParseError(ErrorCode::syntax_error, line_no, tok.column,
                                     "unexpected header token '" + std::string(tok.text) + "'");
                }
            }
            if (!have_k || !have_v) {
                throw ParseError(ErrorCode::syntax_error, line_no, 1, "header must be 'k=<int> v=<rational>'");
            }
            have_header = true;
            continue;
        }
        if (toks.size() != 3) {
            throw ParseError(ErrorCode::syntax_error, line_no, toks.front().column,
                             "expected 'x t w', got " + std::to_string(toks.size()) + " fields");
        }
        Request r;
        r.x = rational_at(toks[0], line_no);
        r.t = rational_at(toks[1], line_no);
        r.w = integer_at(toks[2], line_no);
        if (r.t < Rational(0)) {
            throw ParseError(ErrorCode::negative_time, line_no, toks[1].column, "negative time");
        }
        if (r.w < 0) {
            throw ParseError(ErrorCode::negative_weight, line_no, toks[2].column, "negative weight");
        }
        inst.requests.push_back(r);
    }
    if (!have_header) throw ParseError(ErrorCode::syntax_error, 1, 1, "missing header");
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "k=" << inst.k << " v=" << inst.v.str() << "\n";
    for (const Request& r : inst.requests) {
        out << r.x.str() << " " << r.t.str() << " " << r.w << "\n";
    }
    return out.str();
}

NormalizedInstance normalize_instance(const Instance& inst) {
    NormalizedInstance norm;
    norm.k = inst.k;
    norm.speed = inst.v;
    std::map<std::pair<Rational, Rational>, std::size_t> slot;
    for (std::size_t i = 0; i < inst.requests.size(); ++i) {
        const Request& raw = inst.requests[i];
        Rational x = raw.x / inst.v;
        if (abs(x) > raw.t) {
            norm.dropped_weight += raw.w;
            continue;
        }
        auto [it, fresh] = slot.try_emplace({x, raw.t}, norm.requests.size());
        if (fresh) {
            norm.requests.push_back({x, raw.t, raw.w});
            norm.merge_log.push_back({i});
        } else {
            norm.requests[it->second].w += raw.w;
            norm.merge_log[it->second].push_back(i);
        }
    }
    return norm;
}

Instance as_instance(const NormalizedInstance& norm) {
    return Instance{norm.requests, norm.k, Rational(1)};
}

Instance generate_random(std::uint64_t seed, std::size_t n, std::int64_t time_horizon,
                         std::int64_t weight_max, int k) {
    const auto h = static_cast<std::uint64_t>(time_horizon + 1);
    if (time_horizon < 0 || weight_max < 0 || n > h * h) {
        throw Error(ErrorCode::too_large, "cannot place " + std::to_string(n) + " distinct requests");
    }
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.k = k;
    std::set<std::pair<std::int64_t, std::int64_t>> used;
    while (inst.requests.size() < n) {
        std::int64_t t = draw_between(rng, 0, time_horizon);
        std::int64_t x = draw_between(rng, -t, t);
        std::int64_t w = draw_between(rng, 0, weight_max);
        if (!used.insert({x, t}).second) continue;
        inst.requests.push_back({Rational(x), Rational(t), w});
    }
    return inst;
}

std::string serialize_schedules(const std::vector<RobotSchedule>& robots, std::int64_t weight) {
    std::ostringstream out;
    for (std::size_t i = 0; i < robots.size(); ++i) {
        out << "robot " << (i + 1) << ":";
        for (std::size_t j = 0; j < robots[i].size(); ++j) {
            out << (j == 0 ? " " : " -> ") << "(" << robots[i][j].x.str() << ","
                << robots[i][j].t.str() << ")";
        }
        out << "\n";
    }
    out << "weight=" << weight << "\n";
    return out.str();
}

ScheduleFile parse_schedules(std::string_view text) {
    ScheduleFile file;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li + 1);
        std::string_view line = strip_comment(lines[li]);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() == 1 && toks[0].text.starts_with("weight=")) {
            file.weight = integer_at({toks[0].text.substr(7), toks[0].column + 7}, line_no);
            continue;
        }
        if (toks[0].text != "robot" || toks.size() < 2 || !toks[1].text.ends_with(":")) {
            throw ParseError(ErrorCode::syntax_error, line_no, toks[0].column,
                             "expected 'robot <i>: ...'");
        }
        std::int64_t idx = integer_at({toks[1].text.substr(0, toks[1].text.size() - 1), toks[1].column}, line_no);
        if (idx != static_cast<std::int64_t>(file.robots.size()) + 1) {
            throw ParseError(ErrorCode::syntax_error, line_no, toks[1].column, "robots must be numbered 1, 2, ...");
        }
        RobotSchedule robot;
        for (std::size_t ti = 2; ti < toks.size(); ++ti) {
            const Token& tok = toks[ti];
            bool arrow_expected = !robot.empty() && (ti % 2 == 1);
            if (arrow_expected) {
                if (tok.text != "->") {
                    throw ParseError(ErrorCode::syntax_error, line_no, tok.column, "expected '->'");
                }
                continue;
            }
            std::string_view w = tok.text;
            auto comma = w.find(',');
            if (w.size() < 5 || w.front() != '(' || w.back() != ')' || comma == std::string_view::npos) {
                throw ParseError(ErrorCode::syntax_error, line_no, tok.column, "expected '(x,t)'");
            }
            Token xs{w.substr(1, comma - 1), tok.column + 1};
            Token ts{w.substr(comma + 1, w.size() - comma - 2), tok.column + static_cast<int>(comma) + 1};
            robot.push_back({rational_at(xs, line_no), rational_at(ts, line_no)});
        }
        if (robot.empty() || toks.size() % 2 == 0) {
            throw ParseError(ErrorCode::syntax_error, line_no, toks.back().column, "dangling arrow or empty robot");
        }
        file.robots.push_back(std::move(robot));
    }
    return file;
}

std::vector<RobotSchedule> scale_locations(const std::vector<RobotSchedule>& robots,
                                           const Rational& factor) {
    std::vector<RobotSchedule> out = robots;
    for (auto& robot : out) {
        for (auto& wp : robot) wp.x = wp.x * factor;
    }
    return out;
}

}  // namespace bcp
