#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lande_cli {

struct SuiteResult {
    std::string name;
    int trials = 0;
    bool pass = true;
    double worst = 0.0;  // largest residual observed across all trials
};

// Runs every invariant suite applicable to the given system: the closed-form
// spin-1 suites when two_j == 2, plus the numeric suites for any j. Directions
// are sampled deterministically from `seed`. If `tolerance` is given it
// replaces the per-tier defaults (1e-12 closed-form, 1e-9 eigensolver).
std::vector<SuiteResult> run_verify(int two_j, int trials, std::uint64_t seed,
                                    std::optional<double> tolerance = std::nullopt);

}  // namespace lande_cli
