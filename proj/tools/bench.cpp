#include "bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "replan/generator.hpp"
#include "replan/ilp.hpp"
#include "replan/scenario.hpp"

namespace replan::cli {

namespace {

constexpr std::array<Strategy, 4> kStrategies = {Strategy::BasicPlaster, Strategy::SmartPlaster,
    Strategy::PlasterSet, Strategy::FullRecompute};

const char* strategy_row_label(Strategy strategy) {
    switch (strategy) {
    case Strategy::BasicPlaster: return "Basic plaster";
    case Strategy::SmartPlaster: return "Smart plaster";
    case Strategy::PlasterSet: return "Plaster set";
    case Strategy::FullRecompute: return "Full recomputation";
    }
    return "";
}

} // namespace

BenchReport run_bench(std::uint64_t seed, const WeightConfig& weights, double time_limit_seconds) {
    BenchReport report;
    report.seed = seed;

    GeneratorConfig config;
    config.seed = seed;
    const Instance instance = generate_instance(config);
    const auto encoded = encode_original(instance, weights);
    const auto ilp = solve(encoded.problem, time_limit_seconds);
    const Solution original = decode(encoded.var_map, ilp);
    report.total_assignments = static_cast<int>(original.size());

    for (int scenario = 1; scenario <= 3; ++scenario) {
        const ChangeSet changes = generate_scenario(instance, original, scenario, seed);
        const Instance changed = apply_changes(instance, changes, original);
        for (std::size_t s = 0; s < kStrategies.size(); ++s) {
            const auto start = std::chrono::steady_clock::now();
            const ReoptResult result =
                reoptimise(changed, original, kStrategies[s], weights, time_limit_seconds);
            const auto elapsed = std::chrono::steady_clock::now() - start;

            BenchCell& cell = report.cells[s][static_cast<std::size_t>(scenario - 1)];
            cell.status = result.status;
            cell.kept = result.kept_count;
            cell.total = result.total_count;
            cell.millis =
                std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed)
                    .count();
        }
    }
    return report;
}

std::string render_bench_table(const BenchReport& report) {
    std::ostringstream out;
    out << "Kept assignments out of " << report.total_assignments << " (seed " << report.seed
        << "); '-' marks scenarios the strategy does not solve.\n\n";
    out << std::left << std::setw(20) << "Strategy";
    for (int scenario = 1; scenario <= 3; ++scenario)
        out << std::setw(13) << ("Scenario " + std::to_string(scenario));
    out << "\n";

    for (std::size_t s = 0; s < kStrategies.size(); ++s) {
        out << std::left << std::setw(20) << strategy_row_label(kStrategies[s]);
        for (const BenchCell& cell : report.cells[s]) {
            std::string text = "-";
            if (cell.status == ReoptStatus::Solved)
                text = std::to_string(cell.kept) + "/" + std::to_string(cell.total);
            out << std::setw(13) << text;
        }
        out << "\n";
    }
    return out.str();
}

std::string render_bench_timings(const BenchReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    for (std::size_t s = 0; s < kStrategies.size(); ++s)
        for (std::size_t k = 0; k < 3; ++k)
            out << to_string(kStrategies[s]) << "/scenario" << (k + 1) << ": "
                << report.cells[s][k].millis << " ms ("
                << to_string(report.cells[s][k].status) << ")\n";
    return out.str();
}

} // namespace replan::cli
