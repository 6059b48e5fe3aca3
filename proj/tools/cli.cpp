#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "replan/encoder.hpp"
#include "replan/errors.hpp"
#include "replan/generator.hpp"
#include "replan/instance_io.hpp"
#include "replan/lp_format.hpp"
#include "replan/reopt.hpp"
#include "replan/scenario.hpp"
#include "replan/validate.hpp"

namespace replan::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

void emit(const std::string& content, const std::string& path, std::ostream& fallback) {
    if (path.empty())
        fallback << content;
    else
        write_file(path, content);
}

std::string impact_kind(const ImpactClass& classification) {
    if (std::holds_alternative<Vacuous>(classification)) return "Vacuous";
    if (std::holds_alternative<LocalViolations>(classification)) return "LocalViolations";
    if (std::holds_alternative<TaOverload>(classification)) return "TaOverload";
    return "Complex";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "basic") return Strategy::BasicPlaster;
    if (name == "smart") return Strategy::SmartPlaster;
    if (name == "set") return Strategy::PlasterSet;
    if (name == "full") return Strategy::FullRecompute;
    throw Error("unknown strategy '" + name + "' (expected basic|smart|set|full)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Teaching-assistant allocation replanner"};
    app.require_subcommand(1);

    std::function<int()> action;

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "Generate a synthetic instance");
    GeneratorConfig generator_config;
    std::string generate_out;
    generate_cmd->add_option("--seed", generator_config.seed, "Generator seed")->required();
    generate_cmd->add_option("--modules", generator_config.num_modules, "Number of modules");
    generate_cmd->add_option("--tas", generator_config.num_tas, "Number of TAs");
    generate_cmd->add_option("--weeks", generator_config.weeks, "Planning horizon in weeks");
    generate_cmd->add_option("--out", generate_out, "Instance file to write");
    generate_cmd->callback([&] {
        action = [&]() {
            const Instance instance = generate_instance(generator_config);
            emit(write_instance(instance), generate_out, out);
            return 0;
        };
    });

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance to optimality");
    std::string solve_instance_path, solve_out, solve_export_lp;
    double solve_time_limit = 60.0;
    solve_cmd->add_option("--instance", solve_instance_path, "Instance file")->required();
    solve_cmd->add_option("--out", solve_out, "Solution file to write");
    solve_cmd->add_option("--time-limit", solve_time_limit, "Time limit in seconds");
    solve_cmd->add_option("--export-lp", solve_export_lp, "Also write the program in LP format");
    solve_cmd->callback([&] {
        action = [&]() {
            const Instance instance = read_instance(read_file(solve_instance_path));
            const auto encoded = encode_original(instance);
            if (!solve_export_lp.empty()) write_file(solve_export_lp, export_lp(encoded.problem));
            const auto ilp = solve(encoded.problem, solve_time_limit);
            if (ilp.status == SolveStatus::Infeasible) {
                err << "infeasible\n";
                return 1;
            }
            if (ilp.status == SolveStatus::TimedOut) {
                err << "time limit reached without proof of optimality\n";
                return 1;
            }
            emit(write_solution(decode(encoded.var_map, ilp)), solve_out, out);
            return 0;
        };
    });

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Check a solution against an instance");
    std::string validate_instance_path, validate_solution_path;
    validate_cmd->add_option("--instance", validate_instance_path, "Instance file")->required();
    validate_cmd->add_option("--solution", validate_solution_path, "Solution file")->required();
    validate_cmd->callback([&] {
        action = [&]() {
            const Instance instance = read_instance(read_file(validate_instance_path));
            const Solution solution = read_solution(read_file(validate_solution_path));
            const auto violations = validate_solution(instance, solution);
            if (violations.empty()) {
                out << "valid\n";
                return 0;
            }
            for (const auto& violation : violations) out << describe(violation) << "\n";
            return 1;
        };
    });

    // apply-changes
    auto* apply_cmd = app.add_subcommand("apply-changes", "Apply a change file to an instance");
    std::string apply_instance_path, apply_solution_path, apply_changes_path, apply_out;
    apply_cmd->add_option("--instance", apply_instance_path, "Instance file")->required();
    apply_cmd->add_option("--solution", apply_solution_path, "Original solution file")->required();
    apply_cmd->add_option("--changes", apply_changes_path, "Change command file")->required();
    apply_cmd->add_option("--out", apply_out, "Changed instance file to write");
    apply_cmd->callback([&] {
        action = [&]() {
            const Instance instance = read_instance(read_file(apply_instance_path));
            const Solution solution = read_solution(read_file(apply_solution_path));
            const ChangeSet changes = parse_changes(read_file(apply_changes_path));
            emit(write_instance(apply_changes(instance, changes, solution)), apply_out, out);
            return 0;
        };
    });

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "Classify the impact of an already-applied change");
    std::string classify_instance_path, classify_solution_path;
    classify_cmd->add_option("--instance", classify_instance_path, "Changed instance file")
        ->required();
    classify_cmd->add_option("--solution", classify_solution_path, "Original solution file")
        ->required();
    classify_cmd->callback([&] {
        action = [&]() {
            const Instance instance = read_instance(read_file(classify_instance_path));
            const Solution solution = read_solution(read_file(classify_solution_path));
            const ChangeImpact impact = classify_change(instance, solution);
            out << to_string(impact.classification) << "\n";
            for (const auto& violation : impact.violations) out << describe(violation) << "\n";
            return 0;
        };
    });

    // reopt
    auto* reopt_cmd = app.add_subcommand("reopt", "Repair a solution on a changed instance");
    std::string reopt_instance_path, reopt_solution_path, reopt_strategy_name = "full";
    std::string reopt_out, reopt_script_out;
    WeightConfig reopt_weights;
    double reopt_time_limit = 60.0;
    reopt_cmd->add_option("--instance", reopt_instance_path, "Changed instance file")->required();
    reopt_cmd->add_option("--solution", reopt_solution_path, "Original solution file")->required();
    reopt_cmd->add_option("--strategy", reopt_strategy_name, "basic|smart|set|full")->required();
    reopt_cmd->add_option("--keep-bonus", reopt_weights.keep_bonus, "Bonus per kept pair");
    reopt_cmd->add_option("--green", reopt_weights.green_weight, "Weight of a green pair");
    reopt_cmd->add_option("--amber", reopt_weights.amber_weight, "Weight of an amber pair");
    reopt_cmd->add_option("--time-limit", reopt_time_limit, "Time limit in seconds");
    reopt_cmd->add_option("--out", reopt_out, "New solution file to write");
    reopt_cmd->add_option("--script", reopt_script_out, "Edit script file to write");
    reopt_cmd->callback([&] {
        action = [&]() {
            const Instance instance = read_instance(read_file(reopt_instance_path));
            const Solution solution = read_solution(read_file(reopt_solution_path));
            const Strategy strategy = strategy_from_name(reopt_strategy_name);
            const ReoptResult result =
                reoptimise(instance, solution, strategy, reopt_weights, reopt_time_limit);
            switch (result.status) {
            case ReoptStatus::Solved: {
                if (!reopt_out.empty()) write_file(reopt_out, write_solution(result.new_solution));
                if (!reopt_script_out.empty())
                    write_file(reopt_script_out, write_script(result.edit_script));
                out << "solved kept=" << result.kept_count << "/" << result.total_count
                    << " objective=" << result.objective_value << "\n";
                return 0;
            }
            case ReoptStatus::StrategyInapplicable:
                err << "strategy inapplicable: " << impact_kind(result.impact.classification)
                    << "\n";
                return 1;
            case ReoptStatus::Infeasible:
                err << "infeasible\n";
                return 1;
            case ReoptStatus::TimedOut:
                err << "time limit reached\n";
                return 1;
            }
            return 1;
        };
    });

    // diff
    auto* diff_cmd = app.add_subcommand("diff", "Edit script between two solutions");
    std::string diff_old_path, diff_new_path, diff_out;
    diff_cmd->add_option("--old", diff_old_path, "Original solution file")->required();
    diff_cmd->add_option("--new", diff_new_path, "New solution file")->required();
    diff_cmd->add_option("--out", diff_out, "Script file to write");
    diff_cmd->callback([&] {
        action = [&]() {
            const Solution old_solution = read_solution(read_file(diff_old_path));
            const Solution new_solution = read_solution(read_file(diff_new_path));
            emit(write_script(diff(old_solution, new_solution)), diff_out, out);
            return 0;
        };
    });

    // bench
    auto* bench_cmd =
        app.add_subcommand("bench", "Run every strategy against the three repair scenarios");
    std::uint64_t bench_seed = kDefaultBenchSeed;
    std::string bench_out;
    double bench_time_limit = 60.0;
    bench_cmd->add_option("--seed", bench_seed, "Benchmark seed");
    bench_cmd->add_option("--out", bench_out, "Report file to write");
    bench_cmd->add_option("--time-limit", bench_time_limit, "Per-solve time limit in seconds");
    bench_cmd->callback([&] {
        action = [&]() {
            const BenchReport report = run_bench(bench_seed, {}, bench_time_limit);
            emit(render_bench_table(report), bench_out, out);
            err << render_bench_timings(report);
            return 0;
        };
    });

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string program = "replan";
    argv.push_back(program.data());
    for (auto& arg : storage) argv.push_back(arg.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& parse_error) {
        const int code = app.exit(parse_error, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const Error& error) {
        err << "error: " << error.what() << "\n";
        return 2;
    }
}

} // namespace replan::cli
