#include <benchmark/benchmark.h>

#include "replan/encoder.hpp"
#include "replan/generator.hpp"
#include "replan/ilp.hpp"
#include "replan/instance_io.hpp"
#include "replan/lp_format.hpp"
#include "replan/reopt.hpp"
#include "replan/scenario.hpp"

using namespace replan;

namespace {

constexpr std::uint64_t kSeed = 64;

const Instance& desk_instance() {
    static const Instance instance = [] {
        GeneratorConfig config;
        config.seed = kSeed;
        return generate_instance(config);
    }();
    return instance;
}

const Solution& desk_solution() {
    static const Solution solution = [] {
        const auto encoded = encode_original(desk_instance());
        return decode(encoded.var_map, solve(encoded.problem));
    }();
    return solution;
}

Instance changed_instance(int kind) {
    const ChangeSet changes = generate_scenario(desk_instance(), desk_solution(), kind, kSeed);
    return apply_changes(desk_instance(), changes, desk_solution());
}

void BM_GenerateInstance(benchmark::State& state) {
    GeneratorConfig config;
    config.seed = kSeed;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_instance(config));
    }
}
BENCHMARK(BM_GenerateInstance);

void BM_EncodeOriginal(benchmark::State& state) {
    const Instance& instance = desk_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_original(instance));
    }
}
BENCHMARK(BM_EncodeOriginal);

void BM_SolveOriginal(benchmark::State& state) {
    const auto encoded = encode_original(desk_instance());
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(encoded.problem));
    }
}
BENCHMARK(BM_SolveOriginal);

void BM_ExportLp(benchmark::State& state) {
    const auto encoded = encode_original(desk_instance());
    for (auto _ : state) {
        benchmark::DoNotOptimize(export_lp(encoded.problem));
    }
}
BENCHMARK(BM_ExportLp);

void BM_Reoptimise(benchmark::State& state) {
    const Strategy strategy = static_cast<Strategy>(state.range(0));
    const int scenario = static_cast<int>(state.range(1));
    const Instance changed = changed_instance(scenario);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reoptimise(changed, desk_solution(), strategy));
    }
}
BENCHMARK(BM_Reoptimise)
    ->ArgsProduct({{static_cast<long>(Strategy::BasicPlaster),
                       static_cast<long>(Strategy::SmartPlaster),
                       static_cast<long>(Strategy::PlasterSet),
                       static_cast<long>(Strategy::FullRecompute)},
        {1, 2}})
    ->Args({static_cast<long>(Strategy::FullRecompute), 3});

void BM_WriteReadInstance(benchmark::State& state) {
    const Instance& instance = desk_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(read_instance(write_instance(instance)));
    }
}
BENCHMARK(BM_WriteReadInstance);

} // namespace

BENCHMARK_MAIN();
