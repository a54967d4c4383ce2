#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// End-to-end checks against the built binary: exit codes, format
// autodetection, and byte-stable output.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string write_temp(const std::string& data) {
    static int counter = 0;
    std::string path = "/tmp/maxmatch_cli_test_" + std::to_string(getpid()) + "_" +
                       std::to_string(counter++) + ".in";
    std::ofstream f(path, std::ios::binary);
    f << data;
    return path;
}

RunResult run(const std::string& args, const std::string& stdin_data = "",
              const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(MAXMATCH_CLI_PATH) + " " + args;
    if (!stdin_data.empty()) cmd += " < " + write_temp(stdin_data);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

const std::string kPetersenEdges =
    "0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n5 8\n6 8\n6 9\n7 9\n";

} // namespace

TEST_CASE("analyze reads graph6 and edge lists") {
    RunResult g6 = run("analyze", "C~\n");
    CHECK(g6.exit_code == 0);
    CHECK(g6.out.find("\"chi_prime\":3") != std::string::npos);

    RunResult el = run("analyze", "0 1\n1 2\n2 0\n");
    CHECK(el.exit_code == 0);
    CHECK(el.out.find("\"vizing_class\":\"II\"") != std::string::npos);

    RunResult forced = run("analyze --format graph6", "C~");
    CHECK(forced.exit_code == 0);

    RunResult file_input = run("analyze " + write_temp("C~\n"));
    CHECK(file_input.exit_code == 0);
    CHECK(file_input.out == g6.out);
}

TEST_CASE("exit codes") {
    CHECK(run("analyze", std::string("garbage\x01", 8)).exit_code == 2); // parse error
    CHECK(run("analyze", "\n").exit_code == 2);                          // empty input
    CHECK(run("nonsense-subcommand").exit_code == 1);                    // usage
    CHECK(run("verify --suite bogus").exit_code == 1);                   // usage
    CHECK(run("construct alternative --delta 4 --nu 2").exit_code == 1); // unique
    CHECK(run("verify --suite bound --max-vertices 5").exit_code == 0);
    CHECK(run("verify --suite bound --max-vertices 5 --bound-slack 1").exit_code == 4);
    CHECK(run("verify --suite uniqueness --delta 6 --nu 5").exit_code == 3); // partial
    CHECK(run("analyze", kPetersenEdges, "MAXMATCH_BUDGET=3").exit_code == 3); // undecided
}

TEST_CASE("isolated vertex handling") {
    CHECK(run("analyze", "n 4\n0 1\n2 3\n").exit_code == 0);
    CHECK(run("analyze", "n 5\n0 1\n2 3\n").exit_code == 1);
    RunResult stripped = run("analyze --allow-isolated", "n 5\n0 1\n2 3\n");
    CHECK(stripped.exit_code == 0);
    CHECK(stripped.out.find("\"n\":4") != std::string::npos);
}

TEST_CASE("construct subcommands") {
    RunResult c3 = run("construct c --delta 3");
    CHECK(c3.exit_code == 0);
    CHECK(c3.out == "D]w\n");

    RunResult attaining = run("construct attaining --delta 2 --nu 3 --format edgelist");
    CHECK(attaining.exit_code == 0);
    CHECK(attaining.out.substr(0, 4) == "n 9\n");

    RunResult alt = run("construct alternative --delta 3 --nu 3");
    CHECK(alt.exit_code == 0);
}

TEST_CASE("decompose subcommand") {
    RunResult k4 = run("decompose", "C~");
    CHECK(k4.exit_code == 0);
    CHECK(k4.out.find("\"kind\":\"star\"") != std::string::npos);
    CHECK(k4.out.find("\"kind\":\"factor_critical\"") != std::string::npos);

    CHECK(run("decompose", "D~{").exit_code == 1); // class II -> redirected
}

TEST_CASE("byte-identical across consecutive runs and job counts") {
    CHECK(run("analyze", "C~").out == run("analyze", "C~").out);
    CHECK(run("analyze", kPetersenEdges).out == run("analyze", kPetersenEdges).out);
    CHECK(run("verify --suite class2 --max-vertices 6").out ==
          run("verify --suite class2 --max-vertices 6 --jobs 4").out);
    CHECK(run("verify --suite uniqueness --delta 3 --nu 3").out ==
          run("verify --suite uniqueness --delta 3 --nu 3 --jobs 4").out);
}
