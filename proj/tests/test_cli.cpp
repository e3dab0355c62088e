// End-to-end tests of the chowbso binary: pinned stdout bytes, exit codes,
// and run-to-run determinism. The binary path comes in through the
// CHOWBSO_CLI_PATH compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string("\"") + CHOWBSO_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("pushforward command") {
    RunResult r = run_cli("pushforward --n 2 --poly \"z1*z2^3\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2*z1*z2\n");
    r = run_cli("pushforward --n 3 --poly \"z1*z2^3*z3^5\" --format json");
    CHECK(r.exit_code == 0);
    auto obj = nlohmann::json::parse(r.out);
    CHECK(obj["value"] == "4*z1*z2*z3");
    CHECK(obj["fiber_degree_drop"] == 6);
}

TEST_CASE("normal-form command") {
    CHECK(run_cli("normal-form --ring chow --n 3 --expr \"y^2\"").out == "-16*c6\n");
    CHECK(run_cli("normal-form --ring cohomology --n 2 --expr \"e^2\"").out == "c4\n");
    CHECK(run_cli("normal-form --ring chow --n 3 --expr \"y^2\" --e2-sign plus").out ==
          "16*c6\n");
    CHECK(run_cli("normal-form --ring chow --n 2 --expr \"y*c3 + 2*c3\"").out == "0\n");
    CHECK(run_cli("normal-form --ring chow --n 2 --expr \"(y + c3)^2\"").out ==
          "4*c4 + c3^2\n");
}

TEST_CASE("chern command") {
    CHECK(run_cli("chern --rep dplus --n 2 --in-generators").out == "1 + c2 - 2*e\n");
    CHECK(run_cli("chern --rep std --n 2").out == "1 - z1^2 - z2^2 + z1^2*z2^2\n");
    CHECK(run_cli("chern --rep lambda:0 --n 3").out == "1\n");
    CHECK(run_cli("chern --rep standard --n 1").out == "1 - z1^2\n");
}

TEST_CASE("table command") {
    RunResult r = run_cli("table --max-n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n\td\tclosed\tweyl_order\tweyl_over_n\n"
          "2\t-2\t2\t4\t2\n"
          "3\t-8\t8\t24\t8\n"
          "4\t-48\t48\t192\t48\n");
    r = run_cli("table --max-n 3 --format json");
    auto obj = nlohmann::json::parse(r.out);
    CHECK(obj["rows"].size() == 2);
    CHECK(obj["rows"][1]["d"] == -8);
    CHECK(obj["rows"][1]["weyl_over_n"] == obj["rows"][1]["closed"]);
}

TEST_CASE("verify command reports per-check lines") {
    RunResult r = run_cli("verify --n 2");
    CHECK(r.exit_code == 0);
    int lines = 0;
    std::size_t pos = 0;
    while ((pos = r.out.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 14);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("2\td-coefficient-agreement\tPASS\t") != std::string::npos);

    RunResult js = run_cli("verify --n 2 --format json");
    auto obj = nlohmann::json::parse(js.out);
    CHECK(obj["n"] == 2);
    CHECK(obj["checks"].size() == 14);
    for (const auto& check : obj["checks"]) CHECK(check["status"] == "PASS");
}

TEST_CASE("verify output is byte-stable") {
    RunResult a = run_cli("verify --n 3");
    RunResult b = run_cli("verify --n 3");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("usage and range errors exit with code 2") {
    CHECK(run_cli("verify --n 1").exit_code == 2);
    CHECK(run_cli("verify --n 11").exit_code == 2);
    CHECK(run_cli("pushforward --n 2 --poly \"z1 +\"").exit_code == 2);
    CHECK(run_cli("pushforward --n 2 --poly \"w1\"").exit_code == 2);
    CHECK(run_cli("normal-form --ring chow --n 2 --expr \"c7\"").exit_code == 2);
    CHECK(run_cli("chern --rep dplus --n 7").exit_code == 2);
    CHECK(run_cli("table --max-n 13").exit_code == 2);
    CHECK(run_cli("chern --rep lambda:99 --n 2").exit_code == 2);
    CHECK(run_cli("chern --rep spin --n 2").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --list-checks").out.find("pairing-audit\n") != std::string::npos);
}
