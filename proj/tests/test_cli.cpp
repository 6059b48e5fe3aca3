#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "fixtures.hpp"
#include "replan/instance_io.hpp"
#include "replan/validate.hpp"

using namespace replan;
using replan::test::assign_all;
using replan::test::three_occurrence_instance;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;

    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path()
            / ("replan_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

void put(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string get(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve writes a valid solution and exits 0") {
    TempDir dir;
    put(dir.file("inst.txt"), write_instance(three_occurrence_instance()));
    const auto result = run_cli({"solve", "--instance", dir.file("inst.txt"), "--out",
        dir.file("sol.txt"), "--export-lp", dir.file("prob.lp")});
    CHECK(result.exit_code == 0);

    const Solution solution = read_solution(get(dir.file("sol.txt")));
    CHECK(validate_solution(three_occurrence_instance(), solution).empty());

    const std::string lp = get(dir.file("prob.lp"));
    CHECK(lp.find("Maximize") != std::string::npos);
    CHECK(lp.find("Binary") != std::string::npos);
}

TEST_CASE("solve reports infeasibility with exit 1") {
    TempDir dir;
    Instance instance = three_occurrence_instance();
    instance.approvals.clear(); // nobody eligible
    put(dir.file("inst.txt"), write_instance(instance));
    const auto result = run_cli({"solve", "--instance", dir.file("inst.txt")});
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("infeasible") != std::string::npos);
}

TEST_CASE("validate prints violations and signals them in the exit code") {
    TempDir dir;
    const Instance instance = three_occurrence_instance();
    put(dir.file("inst.txt"), write_instance(instance));
    put(dir.file("good.txt"),
        write_solution(assign_all({{"s1w1", "ta1"}, {"s2w1", "ta2"}, {"s3w2", "ta1"}})));
    put(dir.file("bad.txt"), write_solution(assign_all({{"s1w1", "ta1"}, {"s2w1", "ta2"}})));

    const auto good = run_cli(
        {"validate", "--instance", dir.file("inst.txt"), "--solution", dir.file("good.txt")});
    CHECK(good.exit_code == 0);
    CHECK(good.out == "valid\n");

    const auto bad = run_cli(
        {"validate", "--instance", dir.file("inst.txt"), "--solution", dir.file("bad.txt")});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("understaffed occurrence=s3w2") != std::string::npos);
}

TEST_CASE("the full pipeline runs through files and is byte-deterministic") {
    TempDir dir_a;
    TempDir dir_b;
    for (const TempDir* dir : {&dir_a, &dir_b}) {
        auto at = [&](const std::string& name) { return dir->file(name); };
        CHECK(run_cli({"generate", "--seed", "64", "--out", at("inst.txt")}).exit_code == 0);
        CHECK(run_cli({"solve", "--instance", at("inst.txt"), "--out", at("sol.txt")}).exit_code
            == 0);
        put(at("changes.txt"), "set-max-week-hours ta03 1\n");
        CHECK(run_cli({"apply-changes", "--instance", at("inst.txt"), "--solution", at("sol.txt"),
                  "--changes", at("changes.txt"), "--out", at("inst2.txt")})
                  .exit_code
            == 0);
        const auto classify = run_cli(
            {"classify", "--instance", at("inst2.txt"), "--solution", at("sol.txt")});
        CHECK(classify.exit_code == 0);
        put(at("classify.txt"), classify.out);
        const auto reopt = run_cli({"reopt", "--instance", at("inst2.txt"), "--solution",
            at("sol.txt"), "--strategy", "full", "--out", at("sol2.txt"), "--script",
            at("script.txt")});
        CHECK(reopt.exit_code == 0);
        CHECK(run_cli({"diff", "--old", at("sol.txt"), "--new", at("sol2.txt"), "--out",
                  at("script2.txt")})
                  .exit_code
            == 0);
    }
    for (const char* name : {"inst.txt", "sol.txt", "inst2.txt", "classify.txt", "sol2.txt",
             "script.txt", "script2.txt"})
        CHECK(get(dir_a.file(name)) == get(dir_b.file(name)));
}

TEST_CASE("reopt reports inapplicable strategies with the impact kind") {
    TempDir dir;
    const Instance instance = three_occurrence_instance();
    const Solution original = assign_all({{"s1w1", "ta1"}, {"s2w1", "ta1"}, {"s3w2", "ta2"}});
    put(dir.file("inst.txt"), write_instance(instance));
    put(dir.file("sol.txt"), write_solution(original));
    put(dir.file("changes.txt"), "set-max-week-hours ta1 2\n");
    REQUIRE(run_cli({"apply-changes", "--instance", dir.file("inst.txt"), "--solution",
                dir.file("sol.txt"), "--changes", dir.file("changes.txt"), "--out",
                dir.file("inst2.txt")})
                .exit_code
        == 0);

    const auto result = run_cli({"reopt", "--instance", dir.file("inst2.txt"), "--solution",
        dir.file("sol.txt"), "--strategy", "basic"});
    CHECK(result.exit_code == 1);
    CHECK(result.err == "strategy inapplicable: TaOverload\n");

    const auto solved = run_cli({"reopt", "--instance", dir.file("inst2.txt"), "--solution",
        dir.file("sol.txt"), "--strategy", "set", "--out", dir.file("sol2.txt")});
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("solved kept=") != std::string::npos);
}

TEST_CASE("bench renders the reference table for the default seed") {
    TempDir dir;
    const auto result = run_cli({"bench", "--seed", "64", "--out", dir.file("report.txt")});
    REQUIRE(result.exit_code == 0);
    const std::string report = get(dir.file("report.txt"));
    CHECK(report.find("out of 34") != std::string::npos);
    CHECK(report.find("Basic plaster       33/34        -            -") != std::string::npos);
    CHECK(report.find("Smart plaster       32/34        -            -") != std::string::npos);
    CHECK(report.find("Plaster set         33/34        30/34        -") != std::string::npos);
    CHECK(report.find("Full recomputation  33/34        30/34        0/34") != std::string::npos);
    // timings go to the diagnostic stream, keeping the report deterministic
    CHECK(result.err.find("full/scenario3") != std::string::npos);
}

TEST_CASE("usage and input errors exit with code 2") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"solve"}).exit_code == 2);                                  // missing options
    CHECK(run_cli({"solve", "--instance", "/nonexistent/path"}).exit_code == 2);
    TempDir dir;
    put(dir.file("broken.txt"), "nonsense record\n");
    CHECK(run_cli({"solve", "--instance", dir.file("broken.txt")}).exit_code == 2);
    put(dir.file("inst.txt"), write_instance(three_occurrence_instance()));
    put(dir.file("sol.txt"), "assign occurrence=s1w1 ta=ta1\n");
    CHECK(run_cli({"reopt", "--instance", dir.file("inst.txt"), "--solution", dir.file("sol.txt"),
              "--strategy", "bogus"})
              .exit_code
        == 2);
}

TEST_CASE("help is printed on request with exit 0") {
    const auto result = run_cli({"--help"});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("generate") != std::string::npos);
    CHECK(result.out.find("reopt") != std::string::npos);
}

TEST_SUITE_END();
