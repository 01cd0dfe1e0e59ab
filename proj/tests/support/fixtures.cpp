#include "fixtures.hpp"

#include "bcp/solver.hpp"
#include "follow.hpp"

namespace bcp::testing {

const TraceFixture& worked_example() {
    static const TraceFixture fx{
        "worked_example",
        2,
        {{4, 4, 1}, {8, 8, 1}, {12, 12, 1}, {16, 16, 1}, {13, 6, 1},
         {2, 9, 1}, {3, 10, 1}, {14, 7, 1}, {15, 17, 1}},
        {{1, 2, 3, 4}},
        {0, 6, 7, 3, 2, 1, 5, 8, 9, 10},
        -4,
    };
    return fx;
}

const TraceFixture& zigzag3() {
    static const TraceFixture fx{
        "zigzag3",
        3,
        {{14, 8, 2}, {1, 5, 9}, {5, 14, 2}, {12, 11, 0}, {9, 6, 3},  {13, 4, 3}, {11, 7, 1},
         {10, 10, 4}, {3, 2, 5}, {7, 3, 6}, {6, 1, 8},   {2, 12, 6}, {8, 13, 5}, {4, 9, 7}},
        {{2, 14, 13}, {11, 10, 5, 8, 4}},
        {0, 9, 14, 2, 12, 13, 14, 8, 5, 7, 1, 15},
        -14,
    };
    return fx;
}

const TraceFixture& zigzag4() {
    static const TraceFixture fx{
        "zigzag4",
        4,
        {{21, 20, 4}, {3, 11, 7},  {5, 24, 3},  {11, 8, 8},  {9, 2, 5},   {6, 1, 5},
         {15, 23, 9}, {10, 17, 1}, {1, 15, 7},  {13, 22, 3}, {20, 19, 4}, {16, 3, 5},
         {17, 18, 7}, {23, 14, 8}, {22, 5, 2},  {14, 16, 0}, {2, 6, 6},   {18, 10, 9},
         {19, 4, 9},  {8, 12, 2},  {12, 13, 9}, {4, 21, 8},  {24, 9, 4},  {7, 7, 7}},
        {{17, 2, 22, 10, 7}, {24, 4, 21, 16, 13, 11, 1}, {6, 5, 12, 19, 15, 14}},
        {0, 9, 22, 2, 20, 21, 4, 18, 14, 15, 23, 25},
        -22,
    };
    return fx;
}

std::unique_ptr<LoadedFixture> load(const TraceFixture& fx) {
    auto out = std::make_unique<LoadedFixture>();
    out->inst = instance_from_alpha_beta(fx.rows, fx.k);
    out->ps = PointSet::from_instance(out->inst);
    const PointSet& ps = out->ps;
    out->id_of.assign(fx.rows.size() + 2, 0);
    for (PointId id = 1; id <= ps.n; ++id) {
        out->id_of[ps.request[id] + 1] = id;
    }
    out->id_of.back() = ps.t();
    std::vector<Path> red;
    for (const auto& labels : fx.red) {
        Path p{ps.s()};
        for (int label : labels) p.push_back(out->id_of[label]);
        p.push_back(ps.t());
        red.push_back(std::move(p));
    }
    out->net = std::make_unique<ResidualNetwork>(ps, std::move(red));
    for (int label : fx.path) out->path.push_back(out->id_of[label]);
    out->nodes = expand_point_path(*out->net, out->path);
    return out;
}

std::unique_ptr<LoadedFixture> random_network(std::uint64_t seed, std::size_t n, int red,
                                              std::int64_t horizon, std::int64_t wmax) {
    auto out = std::make_unique<LoadedFixture>();
    if (horizon <= 0) horizon = static_cast<std::int64_t>(n);
    out->inst = normalize_instance(generate_random(seed, n, horizon, wmax, red + 1));
    out->ps = PointSet::from_instance(out->inst);
    std::vector<Path> paths;
    if (red > 0) paths = solve(out->ps, red).paths;
    out->net = std::make_unique<ResidualNetwork>(out->ps, std::move(paths));
    return out;
}

Instance three_requests(int k) {
    Instance inst;
    inst.k = k;
    inst.requests = {{Rational(0), Rational(1), 2}, {Rational(2), Rational(2), 3},
                     {Rational(-1), Rational(2), 2}};
    return inst;
}

}  // namespace bcp::testing
