#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

#ifndef POWMON_CLI_PATH
#error "POWMON_CLI_PATH must point at the powmon binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(POWMON_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("sumset") {
    const RunResult r = run("sumset '{0,1,2,3}' '{0,7}'");
    CHECK(r.code == 0);
    CHECK(r.out == "{0,1,2,3,7,8,9,10}\n");
}

TEST_CASE("predicates exit 0 on true and 1 on false") {
    CHECK(run("atom '{0,7}'").code == 0);
    CHECK(run("atom '{0,1,2}'").code == 1);
    CHECK(run("relcanc '{0,7}'").code == 0);
    CHECK(run("relcanc '{0,1,2,3}'").code == 1);
    CHECK(run("relprime '{0,1}' '{0,2}'").code == 0);
    CHECK(run("relprime '{0,1,2}' '{0,1,4,5}'").code == 1);
    CHECK(run("gcdcrit '{0,1}'").code == 0);
    CHECK(run("gcdcrit '{0,1,2,3}'").code == 1);
}

TEST_CASE("errors exit 2") {
    CHECK(run("sumset '{1,2}' '{0}'").code == 2);     // no zero
    CHECK(run("sumset '{0,' '{0}'").code == 2);       // parse error
    CHECK(run("lengthset").code == 2);                // missing argument
    CHECK(run("nosuchcommand").code == 2);            // unknown subcommand
    CHECK(run("density 25").code == 2);               // over the exact cap
    CHECK(run("family 1 --scales 2").code == 2);      // scale too small
    CHECK(run("compose '{0,1,2,3}' '{0,1}'").code == 2); // uncancellative part
    CHECK(run("--budget 10 factorize '{0,1,2,3,4,5,6,7,8,9,10,11}'").code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").code == 0);
    CHECK(run("factorize --help").code == 0);
}

TEST_CASE("factorize lists canonical words") {
    const RunResult r = run("factorize '{0,1,2,3}'");
    CHECK(r.code == 0);
    CHECK(r.out == "{0,1}+{0,2}\n{0,1}+{0,1}+{0,1}\n");
}

TEST_CASE("lengthset and elasticity") {
    CHECK(run("lengthset '{0,1,2,3,7,8,9,10}'").out == "{2,3,4}\n");
    CHECK(run("elasticity '{0,1,2,3,7,8,9,10}'").out == "2\n");
    CHECK(run("elasticity '{0,1,2,3}'").out == "3/2\n");
}

TEST_CASE("witness output for a failed relcanc") {
    const RunResult r = run("relcanc '{0,1,2,3}'");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "{0,1}"));
    CHECK(contains(r.out, "{0,2}"));
    CHECK(contains(r.out, "{0,1,2}"));
}

TEST_CASE("json output is well-formed and carries the same data") {
    RunResult r = run("--json lengthset '{0,1,2,3,7,8,9,10}'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"lengths\""));

    r = run("--json family 1");
    CHECK(r.code == 0);
    for (const char* key : {"\"i\"", "\"n\"", "\"A\"", "\"B\"", "\"C\"", "\"D\"", "\"S\""})
        CHECK(contains(r.out, key));

    r = run("--json relcanc '{0,1,2,3}'");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "\"relcanc\": false"));
    CHECK(contains(r.out, "\"witness\""));

    // the flag is accepted after the subcommand as well
    r = run("lengthset '{0,1,2,3,7,8,9,10}' --json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"lengths\""));
}

TEST_CASE("family stages print and verify") {
    RunResult r = run("family 1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "S = {0,1,3,4,5,7,8}"));

    r = run("family 1 --verify");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "all checks passed"));

    r = run("family 4 --check-invariants");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "all checks passed"));
}

TEST_CASE("constructors: compose, generators, interval, elasticity") {
    CHECK(run("compose '{0,1}' '{0,1}'").out == "{0,1,3,4}\n");

    RunResult r = run("generators 2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "{0,1,3,4}"));
    CHECK(contains(r.out, "lengths = {2}"));

    r = run("interval 2 --verify");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lengths = {2,3,4}"));
    CHECK(contains(r.out, "verified"));

    r = run("construct-elasticity 3/2 --verify");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "{0,1,3,4,5,7,8}"));
    CHECK(contains(r.out, "rho = 3/2 (verified)"));
    CHECK(contains(run("construct-elasticity 7/3").out, "rho = 7/3 (certified)"));
}

TEST_CASE("prop36 structure and verification") {
    RunResult r = run("prop36 '{0,1,2}' 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "{0,1,2}"));
    CHECK(contains(r.out, "{3}"));

    r = run("prop36 '{0,1,2}' 5 --verify");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS"));

    CHECK(run("prop36 '{0,1,2}' 4").code == 2); // gap too small
}

TEST_CASE("verify-paper passes") {
    const RunResult r = run("verify-paper");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "all items passed"));
    CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("density") {
    RunResult r = run("density 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "5 / 8"));

    r = run("density 10 --samples 50 --seed 7");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "/ 50"));
    // deterministic for a fixed seed
    CHECK(run("density 10 --samples 50 --seed 7").out == r.out);
}

TEST_CASE("budget env variable is honored") {
    const RunResult r =
        run("factorize '{0,1,2}' --budget 100000");
    CHECK(r.code == 0);
    // environment variable path
    const std::string cmd = std::string("POWMON_BUDGET=10 ") + POWMON_CLI_PATH +
                            " factorize '{0,1,2,3,4,5,6,7,8,9,10,11}' 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(contains(out, "budget"));
}
