#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "replan/errors.hpp"
#include "replan/generator.hpp"
#include "replan/instance_io.hpp"
#include "replan/rng.hpp"

using namespace replan;
using replan::test::assign_all;
using replan::test::three_occurrence_instance;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_SUITE_BEGIN("instance-io");

TEST_CASE("write then read is the identity on instances") {
    Instance instance = three_occurrence_instance();
    instance.unavailabilities.push_back({"ta1", "s1w1"});
    instance.locks.push_back({"s2w1", "ta2"});
    canonicalize(instance);
    CHECK(read_instance(write_instance(instance)) == instance);
}

TEST_CASE("read then write is the identity on canonical text") {
    const std::string canonical = write_instance(three_occurrence_instance());
    CHECK(write_instance(read_instance(canonical)) == canonical);
}

TEST_CASE("reading tolerates comments, blank lines and record order") {
    const std::string text =
        "# demo instance\n"
        "ta id=ta1 name=alex maxweek=8 maxsem=20\n"
        "\n"
        "module id=m1 name=algebra   # trailing comment\n"
        "occurrence id=s1w1 session=s1 week=1\n"
        "session id=s1 module=m1 need=1 hours=2 weeks=1\n"
        "approval ta=ta1 module=m1 rating=GREEN\n";
    const Instance instance = read_instance(text);
    CHECK(instance.modules.size() == 1);
    CHECK(instance.sessions.size() == 1);
    CHECK(instance.tas.size() == 1);
    CHECK(instance.rating_of("ta1", "m1") == ApprovalRating::Green);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        (void)read_instance("module id=m1 name=x\nwibble id=z\n");
        FAIL("expected ParseError");
    } catch (const ParseError& error) {
        CHECK(error.line() == 2);
    }
    CHECK_THROWS_AS((void)read_instance("module id=m1\n"), ParseError);       // missing name
    CHECK_THROWS_AS((void)read_instance("module id=m1 name=x extra=1\n"), ParseError);
    CHECK_THROWS_AS((void)read_instance("ta id=t name=n maxweek=abc maxsem=1\n"), ParseError);
    CHECK_THROWS_AS((void)read_instance("module id=m1 id=m2 name=x\n"), ParseError);
}

TEST_CASE("dangling references are integrity errors, not parse errors") {
    const std::string text =
        "module id=m1 name=algebra\n"
        "session id=s1 module=missing need=1 hours=2 weeks=1\n"
        "occurrence id=s1w1 session=s1 week=1\n";
    CHECK_THROWS_AS((void)read_instance(text), IntegrityError);
}

TEST_CASE("solutions round-trip and stay sorted") {
    const Solution solution = assign_all({{"z", "t2"}, {"a", "t1"}});
    const std::string text = write_solution(solution);
    CHECK(text == "assign occurrence=a ta=t1\nassign occurrence=z ta=t2\n");
    CHECK(read_solution(text) == solution);
    CHECK_THROWS_AS((void)read_solution("assign occurrence=a\n"), ParseError);
    CHECK_THROWS_AS((void)read_solution("remove occurrence=a ta=t\n"), ParseError);
}

TEST_CASE("edit scripts round-trip preserving order") {
    EditScript script;
    script.ops.push_back({EditOp::Kind::Unassign, "o1", "t1"});
    script.ops.push_back({EditOp::Kind::Assign, "o1", "t2"});
    const std::string text = write_script(script);
    CHECK(text == "unassign occurrence=o1 ta=t1\nassign occurrence=o1 ta=t2\n");
    CHECK(read_script(text) == script);
}

TEST_CASE("shipped fixture files round-trip byte-identically") {
    for (const char* name : {"tiny_instance.txt", "golden_seed42_instance.txt"}) {
        const std::string text = slurp(std::string(REPLAN_TEST_DATA_DIR) + "/" + name);
        CHECK(write_instance(read_instance(text)) == text);
    }
    const std::string solution_text =
        slurp(std::string(REPLAN_TEST_DATA_DIR) + "/tiny_solution.txt");
    CHECK(write_solution(read_solution(solution_text)) == solution_text);
}

TEST_CASE("mangled instance text never crashes the reader") {
    Rng rng(4242);
    const std::string alphabet = "module session ta id=name week#,=1 \t\n";
    for (int round = 0; round < 500; ++round) {
        std::string text;
        const int length = rng.next_int(0, 80);
        for (int i = 0; i < length; ++i)
            text.push_back(alphabet[static_cast<std::size_t>(
                rng.next_int(0, static_cast<int>(alphabet.size()) - 1))]);
        try {
            const Instance parsed = read_instance(text);
            CHECK(read_instance(write_instance(parsed)) == parsed);
        } catch (const ParseError&) {
        } catch (const IntegrityError&) {
        }
    }
}

TEST_CASE("writers refuse tokens the readers could not take back") {
    Instance instance = three_occurrence_instance();
    instance.tas[0].name = "alex the helpful"; // whitespace
    CHECK_THROWS_AS((void)write_instance(instance), Error);

    instance = three_occurrence_instance();
    instance.modules[0].name = "algebra#1"; // comment marker
    CHECK_THROWS_AS((void)write_instance(instance), Error);

    Solution solution;
    solution.assignments.push_back({"", "ta1"});
    CHECK_THROWS_AS((void)write_solution(solution), Error);
}

TEST_CASE("value-equal instances serialise byte-identically regardless of input order") {
    Instance shuffled = three_occurrence_instance();
    std::reverse(shuffled.sessions.begin(), shuffled.sessions.end());
    std::reverse(shuffled.occurrences.begin(), shuffled.occurrences.end());
    std::reverse(shuffled.tas.begin(), shuffled.tas.end());
    std::reverse(shuffled.approvals.begin(), shuffled.approvals.end());
    CHECK(write_instance(shuffled) == write_instance(three_occurrence_instance()));
}

TEST_CASE("the default seed-42 instance matches its golden file") {
    GeneratorConfig config;
    config.seed = 42;
    const Instance instance = generate_instance(config);
    const std::string golden =
        slurp(std::string(REPLAN_TEST_DATA_DIR) + "/golden_seed42_instance.txt");
    CHECK(write_instance(instance) == golden);
}

TEST_SUITE_END();
