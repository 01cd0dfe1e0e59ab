#include <cstdint>
#include <string>

#include "bcp/plot.hpp"
#include "bcp/solver.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bcp;
using namespace bcp::testing;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

TEST_CASE("plot of the three requests") {
    Instance inst = three_requests(2);
    Solution sol = solve(normalize_instance(inst));
    const std::string svg = render_svg(inst, sol.schedules);
    CHECK(svg.starts_with("<svg"));
    CHECK(occurrences(svg, "class=\"robot") - occurrences(svg, "class=\"robot-ab") == 2);
    CHECK(occurrences(svg, "class=\"robot-ab") == 2);
    CHECK(occurrences(svg, "class=\"request\"") == 3);
    CHECK(occurrences(svg, "class=\"request-ab\"") == 3);
    CHECK(render_svg(inst, sol.schedules) == svg);
    CHECK(fnv1a(svg) == 14132030961821370914ull);
}

TEST_CASE("plot of an empty instance") {
    Instance inst{{}, 1, 1};
    const std::string svg = render_svg(inst, {{{0, 0}}});
    CHECK(occurrences(svg, "class=\"request") == 0);
    CHECK(occurrences(svg, "class=\"frame\"") == 2);
}
