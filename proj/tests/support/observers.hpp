#pragma once

#include <vector>

#include "bcp/solver.hpp"

namespace bcp::testing {

// Keeps every round's paths before and after uncrossing.
struct RoundLog : RoundObserver {
    struct Round {
        std::vector<Path> augmented;
        std::vector<Path> uncrossed;
    };
    std::vector<Round> rounds;

    void on_round(int, const ResidualNetwork&, const RelaxState&, const std::vector<NodeKey>&,
                  const std::vector<Path>& augmented, const std::vector<Path>& uncrossed) override {
        rounds.push_back({augmented, uncrossed});
    }
};

}  // namespace bcp::testing
