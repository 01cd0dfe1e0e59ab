// Command-line front end: solve, verify, bench, gen, plot.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcp/error.hpp"
#include "bcp/instance.hpp"
#include "bcp/oracles.hpp"
#include "bcp/plot.hpp"
#include "bcp/solver.hpp"
#include "bcp/validate.hpp"

namespace {

using namespace bcp;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBreach = 2;
constexpr int kExitMismatch = 3;

// Failure that maps straight to an exit code.
struct Exit {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Exit{kExitInput, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Exit{kExitInput, "cannot write " + path};
}

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::syntax_error:
        case ErrorCode::negative_time:
        case ErrorCode::negative_weight:
        case ErrorCode::non_positive_speed:
        case ErrorCode::too_large:
            return true;
        default:
            return false;
    }
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    if (v.empty()) return 0;
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

std::string node_name(const PointSet& ps, NodeKey key) {
    const PointId id = node_point(key);
    if (id == ps.s()) return "s";
    if (id == ps.t()) return "t";
    return std::to_string(id) + (node_side(key) == Side::plus ? "+" : "-");
}

std::string format_trace(const PointSet& ps, const std::vector<std::vector<TraceEvent>>& rounds) {
    std::ostringstream out;
    for (std::size_t r = 0; r < rounds.size(); ++r) {
        out << "round " << r + 1 << "\n";
        for (const TraceEvent& e : rounds[r]) {
            if (e.kind == TraceEvent::Kind::edge) {
                out << "relax " << node_name(ps, e.from) << " " << node_name(ps, e.to) << "\n";
                continue;
            }
            out << "Relax " << node_name(ps, e.to) << " alpha<=" << e.alpha_hi << " beta=["
                << e.beta_lo << "," << e.beta_hi << "]";
            if (!e.excluded.empty()) {
                out << " excluded=";
                for (std::size_t i = 0; i < e.excluded.size(); ++i) {
                    out << (i ? "," : "") << node_name(ps, plus_node(e.excluded[i]));
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

struct SolveOptions {
    std::string input;
    int k = 0;
    std::string oracle = "none";
    std::string trace;
    std::string out;
    std::int64_t threshold = 0;
};

int cmd_solve(const SolveOptions& opt) {
    Instance raw = parse_instance(read_file(opt.input));
    if (opt.k > 0) raw.k = opt.k;
    const NormalizedInstance inst = normalize_instance(raw);
    const PointSet points = PointSet::from_instance(inst);

    SolverConfig cfg;
    cfg.base_case_threshold = opt.threshold;
    cfg.trace = !opt.trace.empty();
    const auto start = std::chrono::steady_clock::now();
    Solution sol = solve(inst, cfg);
    const double elapsed = ms_since(start);

    Report report = check_schedule(inst, sol.schedules);
    Report collisions = check_noncrossing(sol.schedules);
    report.violations.insert(report.violations.end(), collisions.violations.begin(),
                             collisions.violations.end());
    const std::int64_t collected = total_weight(inst, sol.schedules);
    if (!report.ok() || collected != sol.weight) {
        std::cerr << report.str();
        throw Exit{kExitBreach, "solver output failed validation (collected " + std::to_string(collected) +
                                    ", reported " + std::to_string(sol.weight) + ")"};
    }

    if (cfg.trace) write_output(opt.trace, format_trace(points, sol.round_traces));
    const auto schedules = scale_locations(sol.schedules, inst.speed);
    if (!opt.out.empty()) write_output(opt.out, serialize_schedules(schedules, sol.weight));

    std::cout << "weight=" << sol.weight << " n=" << inst.requests.size() << " k=" << inst.k
              << " time_ms=" << static_cast<long long>(elapsed) << "\n";

    if (opt.oracle == "none") return kExitOk;
    std::int64_t expected = 0;
    if (opt.oracle == "brute") {
        expected = brute_force(points, inst.k);
    } else if (points.n <= 4096) {
        expected = successive_shortest_paths(build_explicit_dag(points), inst.k).weight_after.back();
    } else {
        expected = dense_successive_shortest_paths(points, inst.k).back();
    }
    const bool match = expected == sol.weight;
    std::cout << "oracle=" << opt.oracle << " oracle_weight=" << expected
              << " match=" << (match ? "true" : "false") << "\n";
    return match ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& instance_path, const std::string& schedule_path) {
    const NormalizedInstance inst = normalize_instance(parse_instance(read_file(instance_path)));
    const ScheduleFile file = parse_schedules(read_file(schedule_path));
    const auto robots = scale_locations(file.robots, Rational(1) / inst.speed);

    Report report = check_schedule(inst, robots);
    Report collisions = check_noncrossing(robots);
    report.violations.insert(report.violations.end(), collisions.violations.begin(),
                             collisions.violations.end());
    const std::int64_t collected = total_weight(inst, robots);
    std::cout << report.str();
    bool ok = report.ok();
    if (file.weight && *file.weight != collected) {
        std::cout << "WeightMismatch claimed=" << *file.weight << " collected=" << collected << "\n";
        ok = false;
    }
    std::cout << "ok=" << (ok ? "true" : "false") << " weight=" << collected << "\n";
    return ok ? kExitOk : kExitInput;
}

struct BenchOptions {
    std::vector<std::size_t> sizes{1024};
    std::vector<std::uint64_t> seeds{1};
    int k = 2;
    std::string baseline = "dense";
    std::int64_t weight_max = 100;
};

int cmd_bench(const BenchOptions& opt) {
    struct Cell {
        double solver_ms, search_ms, ssp_ms;
    };
    std::vector<std::vector<Cell>> by_size;
    bool all_match = true;
    for (std::size_t n : opt.sizes) {
        std::vector<Cell> cells;
        for (std::uint64_t seed : opt.seeds) {
            const auto time_horizon = static_cast<std::int64_t>(n);
            const NormalizedInstance inst =
                normalize_instance(generate_random(seed, n, time_horizon, opt.weight_max, opt.k));
            const PointSet points = PointSet::from_instance(inst);

            auto start = std::chrono::steady_clock::now();
            const Solution sol = solve(points, opt.k);
            const double solver_ms = ms_since(start);
            const double search_ms = sol.rounds.back().search_ms;

            double ssp_ms = 0;
            std::string ssp_weight = "-";
            if (opt.baseline != "none") {
                start = std::chrono::steady_clock::now();
                const std::int64_t w =
                    opt.baseline == "dense"
                        ? dense_successive_shortest_paths(points, opt.k).back()
                        : successive_shortest_paths(build_explicit_dag(points), opt.k).weight_after.back();
                ssp_ms = ms_since(start);
                ssp_weight = std::to_string(w);
                all_match = all_match && w == sol.weight;
            }
            std::cout << "row n=" << n << " k=" << opt.k << " seed=" << seed << " weight=" << sol.weight
                      << " ssp_weight=" << ssp_weight << " solver_ms=" << fixed(solver_ms, 3)
                      << " search_ms=" << fixed(search_ms, 3) << " ssp_ms=" << fixed(ssp_ms, 3)
                      << " ratio=" << fixed(solver_ms > 0 ? ssp_ms / solver_ms : 0, 3) << "\n";
            cells.push_back({solver_ms, search_ms, ssp_ms});
        }
        by_size.push_back(std::move(cells));
    }
    auto med = [&](std::size_t i, double Cell::*field) {
        std::vector<double> v;
        for (const Cell& c : by_size[i]) v.push_back(c.*field);
        return median(v);
    };
    for (std::size_t i = 0; i < opt.sizes.size(); ++i) {
        std::cout << "median n=" << opt.sizes[i] << " k=" << opt.k
                  << " solver_ms=" << fixed(med(i, &Cell::solver_ms), 3)
                  << " search_ms=" << fixed(med(i, &Cell::search_ms), 3)
                  << " ssp_ms=" << fixed(med(i, &Cell::ssp_ms), 3) << "\n";
    }
    for (std::size_t i = 1; i < opt.sizes.size(); ++i) {
        auto ratio = [&](double Cell::*field) {
            const double before = med(i - 1, field);
            return before > 0 ? med(i, field) / before : 0.0;
        };
        std::cout << "doubling from=" << opt.sizes[i - 1] << " to=" << opt.sizes[i]
                  << " solver_ratio=" << fixed(ratio(&Cell::solver_ms), 3)
                  << " search_ratio=" << fixed(ratio(&Cell::search_ms), 3)
                  << " ssp_ratio=" << fixed(ratio(&Cell::ssp_ms), 3) << "\n";
    }
    return all_match ? kExitOk : kExitMismatch;
}

struct GenOptions {
    std::size_t n = 100;
    std::uint64_t seed = 1;
    int k = 2;
    std::int64_t horizon = 0;
    std::int64_t weight_max = 100;
    std::string out;
};

int cmd_gen(const GenOptions& opt) {
    const std::int64_t horizon = opt.horizon > 0 ? opt.horizon : static_cast<std::int64_t>(opt.n);
    write_output(opt.out, serialize_instance(generate_random(opt.seed, opt.n, horizon, opt.weight_max, opt.k)));
    return kExitOk;
}

int cmd_plot(const std::string& instance_path, const std::string& schedule_path, const std::string& out) {
    const Instance raw = parse_instance(read_file(instance_path));
    const NormalizedInstance inst = normalize_instance(raw);
    const ScheduleFile file = parse_schedules(read_file(schedule_path));
    const Report report = check_schedule(inst, scale_locations(file.robots, Rational(1) / inst.speed));
    if (!report.ok()) {
        std::cerr << report.str();
        throw Exit{kExitInput, "schedule does not match the instance"};
    }
    write_output(out, render_svg(raw, file.robots));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Offline k-robot request collection on a line"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance and print a summary line");
    solve_cmd->add_option("instance", solve_opt.input, "instance file")->required();
    solve_cmd->add_option("--k", solve_opt.k, "override the robot count");
    solve_cmd->add_option("--oracle", solve_opt.oracle, "cross-check against an oracle")
        ->check(CLI::IsMember({"ssp", "brute", "none"}));
    solve_cmd->add_option("--trace", solve_opt.trace, "write the relax trace to this file");
    solve_cmd->add_option("--out", solve_opt.out, "write schedules to this file ('-' for stdout)");
    solve_cmd->add_option("--threshold", solve_opt.threshold, "base-case size, 0 for automatic")
        ->check(CLI::NonNegativeNumber);

    std::string verify_instance, verify_schedule;
    auto* verify_cmd = app.add_subcommand("verify", "check a schedule file against an instance");
    verify_cmd->add_option("instance", verify_instance, "instance file")->required();
    verify_cmd->add_option("schedule", verify_schedule, "schedule file")->required();

    BenchOptions bench_opt;
    auto* bench_cmd = app.add_subcommand("bench", "time the solver against the quadratic baseline");
    bench_cmd->add_option("--sizes", bench_opt.sizes, "instance sizes")->delimiter(',');
    bench_cmd->add_option("--seeds", bench_opt.seeds, "generator seeds")->delimiter(',');
    bench_cmd->add_option("--k", bench_opt.k, "robots")->check(CLI::Range(1, 32));
    bench_cmd->add_option("--oracle", bench_opt.baseline, "baseline: dense, ssp or none")
        ->check(CLI::IsMember({"dense", "ssp", "none"}));
    bench_cmd->add_option("--wmax", bench_opt.weight_max, "largest request weight");

    GenOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("gen", "write a random instance");
    gen_cmd->add_option("--n", gen_opt.n, "requests")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_opt.seed, "generator seed");
    gen_cmd->add_option("--k", gen_opt.k, "robots")->check(CLI::Range(1, 32));
    gen_cmd->add_option("--horizon", gen_opt.horizon, "largest time, default n");
    gen_cmd->add_option("--wmax", gen_opt.weight_max, "largest request weight");
    gen_cmd->add_option("--out", gen_opt.out, "output file, default stdout");

    std::string plot_instance, plot_schedule, plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "render an instance and its schedules as SVG");
    plot_cmd->add_option("instance", plot_instance, "instance file")->required();
    plot_cmd->add_option("schedule", plot_schedule, "schedule file")->required();
    plot_cmd->add_option("--out", plot_out, "output file, default stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_opt);
        if (*verify_cmd) return cmd_verify(verify_instance, verify_schedule);
        if (*bench_cmd) return cmd_bench(bench_opt);
        if (*gen_cmd) return cmd_gen(gen_opt);
        if (*plot_cmd) return cmd_plot(plot_instance, plot_schedule, plot_out);
    } catch (const Exit& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kExitInput : kExitBreach;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBreach;
    }
    return kExitOk;
}
