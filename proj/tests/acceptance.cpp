// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run through ctest as `acceptance` or directly.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "bench.hpp"
#include "cli.hpp"
#include "replan/change.hpp"
#include "replan/encoder.hpp"
#include "replan/errors.hpp"
#include "replan/generator.hpp"
#include "replan/instance_io.hpp"
#include "replan/oracle.hpp"
#include "replan/reopt.hpp"
#include "replan/rng.hpp"
#include "replan/scenario.hpp"
#include "replan/validate.hpp"

using namespace replan;
namespace fs = std::filesystem;

namespace {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CriterionResult> g_results;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    g_results.push_back({id, name, pass, detail});
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

GeneratorConfig tiny_config(std::uint64_t seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.num_modules = 2;
    config.num_tas = 5;
    config.weeks = 2;
    config.sessions_per_module = {1, 1}; // two sessions -> at most 4 occurrences
    config.weeks_per_session = {1, 2};
    config.num_tas_per_session = {1, 2};
    return config;
}

struct SolvedCorpus {
    int solved_results = 0;
    int validation_failures = 0;
    int script_failures = 0;

    void absorb(const Instance& instance_prime, const Solution& original,
        const ReoptResult& result) {
        if (result.status != ReoptStatus::Solved) return;
        ++solved_results;
        if (!validate_solution(instance_prime, result.new_solution).empty())
            ++validation_failures;
        bool order_ok = true;
        bool seen_assign = false;
        for (const auto& op : result.edit_script.ops) {
            if (op.kind == EditOp::Kind::Assign)
                seen_assign = true;
            else if (seen_assign)
                order_ok = false;
        }
        bool replay_ok = false;
        try {
            replay_ok = apply_script(result.edit_script, original) == result.new_solution;
        } catch (const Error&) {
            replay_ok = false;
        }
        if (!order_ok || !replay_ok) ++script_failures;
    }
};

SolvedCorpus g_corpus;

struct PreparedBench {
    Instance instance;
    Solution original;
    std::vector<Instance> changed;  // scenarios 1..3
};

PreparedBench prepare(std::uint64_t seed) {
    PreparedBench prepared;
    GeneratorConfig config;
    config.seed = seed;
    prepared.instance = generate_instance(config);
    const auto encoded = encode_original(prepared.instance);
    prepared.original = decode(encoded.var_map, solve(encoded.problem));
    for (int kind = 1; kind <= 3; ++kind) {
        const ChangeSet changes =
            generate_scenario(prepared.instance, prepared.original, kind, seed);
        prepared.changed.push_back(apply_changes(prepared.instance, changes, prepared.original));
    }
    return prepared;
}

void criterion_1_applicability() {
    const auto start = std::chrono::steady_clock::now();
    const cli::BenchReport report_data = cli::run_bench(cli::kDefaultBenchSeed);
    const double elapsed = seconds_since(start);

    const bool expected_solved[4][3] = {
        {true, false, false}, // basic
        {true, false, false}, // smart
        {true, true, false},  // set
        {true, true, true},   // full
    };
    int matches = 0;
    for (int s = 0; s < 4; ++s)
        for (int k = 0; k < 3; ++k) {
            const bool solved = report_data.cells[s][k].status == ReoptStatus::Solved;
            if (solved == expected_solved[s][k]) ++matches;
        }
    std::ostringstream detail;
    detail << matches << "/12 cells match, " << elapsed << " s";
    report(1, "applicability matrix reproduction", matches == 12 && elapsed < 60.0, detail.str());
}

void criterion_2_kept_structure() {
    // Reference numbers on the tuned fixture.
    const PreparedBench tuned = prepare(cli::kDefaultBenchSeed);
    const int total = static_cast<int>(tuned.original.size());
    bool tuned_ok = total == 34;

    auto run = [&](int scenario, Strategy strategy) {
        const ReoptResult result =
            reoptimise(tuned.changed[static_cast<std::size_t>(scenario - 1)], tuned.original,
                strategy);
        g_corpus.absorb(tuned.changed[static_cast<std::size_t>(scenario - 1)], tuned.original,
            result);
        return result;
    };
    tuned_ok = tuned_ok && run(1, Strategy::BasicPlaster).kept_count == 33;
    tuned_ok = tuned_ok && run(1, Strategy::SmartPlaster).kept_count == 32;
    tuned_ok = tuned_ok && run(1, Strategy::PlasterSet).kept_count == 33;
    tuned_ok = tuned_ok && run(1, Strategy::FullRecompute).kept_count == 33;
    tuned_ok = tuned_ok && run(2, Strategy::PlasterSet).kept_count == 30;
    tuned_ok = tuned_ok && run(2, Strategy::FullRecompute).kept_count == 30;
    tuned_ok = tuned_ok && run(3, Strategy::FullRecompute).kept_count == 0;

    // Structural laws across seeds, wherever the scenarios are constructible.
    int structural_seeds = 0;
    bool structural_ok = true;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        PreparedBench prepared;
        try {
            prepared = prepare(seed);
        } catch (const ScenarioUnconstructibleError&) {
            continue;
        } catch (const GenerationFailedError&) {
            continue;
        }
        ++structural_seeds;
        const int seed_total = static_cast<int>(prepared.original.size());

        const ReoptResult basic =
            reoptimise(prepared.changed[0], prepared.original, Strategy::BasicPlaster);
        g_corpus.absorb(prepared.changed[0], prepared.original, basic);
        structural_ok = structural_ok && basic.status == ReoptStatus::Solved
            && basic.kept_count == seed_total - 1;

        const ReoptResult smart =
            reoptimise(prepared.changed[0], prepared.original, Strategy::SmartPlaster);
        g_corpus.absorb(prepared.changed[0], prepared.original, smart);
        structural_ok = structural_ok && smart.status == ReoptStatus::Solved
            && smart.kept_count == seed_total - 2;

        const ReoptResult set_result =
            reoptimise(prepared.changed[1], prepared.original, Strategy::PlasterSet);
        g_corpus.absorb(prepared.changed[1], prepared.original, set_result);
        structural_ok = structural_ok && set_result.status == ReoptStatus::Solved
            && set_result.kept_count <= seed_total - 2;

        const ReoptResult full =
            reoptimise(prepared.changed[2], prepared.original, Strategy::FullRecompute);
        g_corpus.absorb(prepared.changed[2], prepared.original, full);
        structural_ok =
            structural_ok && full.status == ReoptStatus::Solved && full.kept_count == 0;
    }
    structural_ok = structural_ok && structural_seeds >= 6;

    std::ostringstream detail;
    detail << "tuned fixture " << (tuned_ok ? "matches" : "MISMATCH") << ", structural law on "
           << structural_seeds << " seeds";
    report(2, "kept-assignment structure", tuned_ok && structural_ok, detail.str());
}

void criterion_3_solver_oracle() {
    const auto start = std::chrono::steady_clock::now();
    int compared = 0;
    int mismatches = 0;
    for (std::uint64_t seed = 1; compared < 200; ++seed) {
        Instance instance;
        try {
            instance = generate_instance(tiny_config(seed));
        } catch (const GenerationFailedError&) {
            continue;
        }
        const auto encoded = encode_original(instance);
        const auto ilp = solve(encoded.problem, 10.0);
        const auto oracle = brute_force_optimum(instance);
        ++compared;
        if (ilp.status != SolveStatus::Optimal || !oracle) {
            ++mismatches; // generator guarantees solvable instances
            continue;
        }
        const Solution decoded = decode(encoded.var_map, ilp);
        if (ilp.objective_value != oracle->objective) ++mismatches;
        if (!validate_solution(instance, decoded).empty()) ++mismatches;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << compared << " instances, " << mismatches << " mismatches, " << elapsed << " s";
    report(3, "solver-oracle equivalence", mismatches == 0 && elapsed < 30.0, detail.str());
}

void criterion_4_min_perturbation() {
    int compared = 0;
    int mismatches = 0;
    for (std::uint64_t seed = 1; compared < 100; ++seed) {
        Instance instance;
        try {
            instance = generate_instance(tiny_config(seed));
        } catch (const GenerationFailedError&) {
            continue;
        }
        const auto encoded = encode_original(instance);
        const Solution original = decode(encoded.var_map, solve(encoded.problem, 10.0));
        if (original.assignments.empty()) continue;

        Rng rng(derive_seed(seed, 777));
        ChangeSet changes;
        if (rng.chance(1, 2)) {
            const auto& victim = original.assignments[static_cast<std::size_t>(
                rng.next_int(0, static_cast<int>(original.assignments.size()) - 1))];
            changes.changes.push_back(BlockOccurrence{victim.ta_id, victim.occurrence_id});
        } else {
            const auto& ta = instance.tas[static_cast<std::size_t>(
                rng.next_int(0, static_cast<int>(instance.tas.size()) - 1))];
            const int used = hours_assigned(instance, original, ta.id);
            changes.changes.push_back(SetMaxSemesterHours{ta.id, std::max(0, used - 1)});
        }
        const Instance changed = apply_changes(instance, changes, original);

        const ReoptResult full = reoptimise(changed, original, Strategy::FullRecompute);
        const auto oracle = brute_force_min_perturbation(changed, original);
        ++compared;
        if (!oracle) {
            if (full.status == ReoptStatus::Solved) ++mismatches;
            continue;
        }
        if (full.status != ReoptStatus::Solved || full.kept_count != oracle->kept_count) {
            ++mismatches;
            continue;
        }
        g_corpus.absorb(changed, original, full);
    }
    std::ostringstream detail;
    detail << compared << " changed instances, " << mismatches << " mismatches";
    report(4, "minimal perturbation", mismatches == 0, detail.str());
}

void criterion_7_vacuous_fixpoint() {
    bool ok = true;
    int checked = 0;
    for (const std::uint64_t seed : {cli::kDefaultBenchSeed, std::uint64_t{1}, std::uint64_t{2},
             std::uint64_t{3}, std::uint64_t{5}}) {
        GeneratorConfig config;
        config.seed = seed;
        Instance instance;
        try {
            instance = generate_instance(config);
        } catch (const GenerationFailedError&) {
            continue;
        }
        const auto encoded = encode_original(instance);
        const Solution original = decode(encoded.var_map, solve(encoded.problem));
        ChangeSet changes;
        try {
            changes = generate_scenario(instance, original, 4, seed);
        } catch (const ScenarioUnconstructibleError&) {
            continue;
        }
        const Instance changed = apply_changes(instance, changes, original);
        if (!classify_change(changed, original).is_vacuous()) {
            ok = false;
            continue;
        }
        ++checked;
        for (const Strategy strategy : {Strategy::BasicPlaster, Strategy::SmartPlaster,
                 Strategy::PlasterSet, Strategy::FullRecompute}) {
            const ReoptResult result = reoptimise(changed, original, strategy);
            g_corpus.absorb(changed, original, result);
            ok = ok && result.status == ReoptStatus::Solved
                && result.new_solution == original && result.edit_script.empty();
        }
    }
    ok = ok && checked >= 3;
    std::ostringstream detail;
    detail << checked << " seeds checked";
    report(7, "vacuous fixpoint", ok, detail.str());
}

void criterion_8_determinism() {
    struct TempDir {
        fs::path path;
        explicit TempDir(const std::string& tag) {
            path = fs::temp_directory_path() / ("replan_acceptance_" + tag);
            fs::remove_all(path);
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }
        std::string file(const std::string& name) const { return (path / name).string(); }
    };

    TempDir dir_a("a");
    TempDir dir_b("b");
    bool ok = true;
    std::ostringstream sink_out;
    std::ostringstream sink_err;
    for (const TempDir* dir : {&dir_a, &dir_b}) {
        auto at = [&](const std::string& name) { return dir->file(name); };
        auto call = [&](const std::vector<std::string>& args) {
            const int code = cli::run(args, sink_out, sink_err);
            ok = ok && code == 0;
        };
        call({"generate", "--seed", "64", "--out", at("inst.txt")});
        call({"solve", "--instance", at("inst.txt"), "--out", at("sol.txt"), "--export-lp",
            at("prob.lp")});
        {
            std::ofstream changes(at("changes.txt"));
            changes << "block ta00 week 2\nlock-before-week 2\n";
        }
        call({"apply-changes", "--instance", at("inst.txt"), "--solution", at("sol.txt"),
            "--changes", at("changes.txt"), "--out", at("inst2.txt")});
        call({"reopt", "--instance", at("inst2.txt"), "--solution", at("sol.txt"), "--strategy",
            "full", "--out", at("sol2.txt"), "--script", at("script.txt")});
        call({"diff", "--old", at("sol.txt"), "--new", at("sol2.txt"), "--out", at("script2.txt")});
        call({"bench", "--seed", "64", "--out", at("bench.txt")});
    }
    int compared = 0;
    for (const char* name :
        {"inst.txt", "sol.txt", "prob.lp", "inst2.txt", "sol2.txt", "script.txt", "script2.txt",
            "bench.txt"}) {
        std::ifstream a(dir_a.file(name), std::ios::binary);
        std::ifstream b(dir_b.file(name), std::ios::binary);
        std::ostringstream ca;
        std::ostringstream cb;
        ca << a.rdbuf();
        cb << b.rdbuf();
        ok = ok && a.good() && b.good() && ca.str() == cb.str() && !ca.str().empty();
        ++compared;
    }
    std::ostringstream detail;
    detail << compared << " artifacts byte-compared";
    report(8, "pipeline determinism", ok, detail.str());
}

} // namespace

int main() {
    criterion_1_applicability();
    criterion_2_kept_structure();
    criterion_3_solver_oracle();
    criterion_4_min_perturbation();
    criterion_7_vacuous_fixpoint();
    criterion_8_determinism();

    // Criteria 5 and 6 aggregate over every Solved result produced above.
    {
        std::ostringstream detail;
        detail << g_corpus.solved_results << " solved results, " << g_corpus.validation_failures
               << " with violations";
        report(5, "strong consistency improvement",
            g_corpus.solved_results > 0 && g_corpus.validation_failures == 0, detail.str());
    }
    {
        std::ostringstream detail;
        detail << g_corpus.solved_results << " scripts replayed, " << g_corpus.script_failures
               << " failures";
        report(6, "edit-script soundness",
            g_corpus.solved_results > 0 && g_corpus.script_failures == 0, detail.str());
    }

    std::sort(g_results.begin(), g_results.end(),
        [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
    bool all_pass = true;
    for (const auto& result : g_results) {
        all_pass = all_pass && result.pass;
        std::cout << (result.pass ? "[PASS]" : "[FAIL]") << " criterion " << result.id << ": "
                  << result.name << " (" << result.detail << ")\n";
    }
    return all_pass ? 0 : 1;
}
