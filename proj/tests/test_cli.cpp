#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = std::string(CLI_BINARY) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "eulersym_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("generate writes graph and automorphism files") {
    auto dir = temp_dir();
    auto graph = (dir / "kst.json").string();
    auto aut = (dir / "kst_aut.json").string();
    RunResult r = run("generate --family Kst --s 2 --t 3 --lambda 2 --out " + graph + " --aut " +
                      aut + " --dot " + (dir / "kst.dot").string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(std::ifstream(graph));
    CHECK(j["vertex_count"] == 5);
    CHECK(j["edges"].size() == 12);
    std::ifstream dot(dir / "kst.dot");
    std::string first_line;
    std::getline(dot, first_line);
    CHECK(first_line == "graph {");

    SUBCASE("verify accepts the generated pair") {
        RunResult v = run("verify --graph " + graph + " --aut " + aut);
        CHECK(v.exit_code == 0);
        auto report = nlohmann::json::parse(v.output);
        CHECK(report["valid"] == true);
        CHECK(report["order"] == 12);
    }
    SUBCASE("classify round-trips to the generating family") {
        RunResult c = run("classify --graph " + graph + " --aut " + aut);
        CHECK(c.exit_code == 0);
        CHECK(c.output.find("Kst") != std::string::npos);
    }
}

TEST_CASE("generate rejects invalid specs with exit code 2") {
    RunResult r = run("generate --family Gamma2r2r --r 4");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("odd") != std::string::npos);
}

TEST_CASE("generate KK degenerate corner") {
    RunResult r = run("generate --family KK --r 1 --rp 1 --s 1 --t 1 --tp 1 --u 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["vertices"] == 5);
    CHECK(j["edges"] == 4);
}

TEST_CASE("euler certification") {
    SUBCASE("C5 spec gives a certificate with H = D(C)") {
        RunResult r = run("euler --family CycleN --n 5");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["exists"] == true);
        CHECK(j["certificate"]["h_group"] == "D(C)");
    }
    SUBCASE("K2^(3) does not have one") {
        RunResult r = run("euler --family K2Lambda --n 3");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["exists"] == false);
    }
    SUBCASE("raw C4 graph goes through the exhaustive path") {
        auto dir = temp_dir();
        auto graph = (dir / "c4.json").string();
        RunResult gen = run("generate --family CycleN --n 4 --out " + graph);
        REQUIRE(gen.exit_code == 0);
        RunResult r = run("euler --graph " + graph);
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.output);
        CHECK(j["exists"] == true);
    }
}

TEST_CASE("bicos") {
    RunResult r = run("bicos --cyclic 6 --L 0,2,4 --R 0,3 --J 0");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["vertices"] == 5);
    CHECK(j["edges"] == 6);
    CHECK(j["consistent"] == true);
    CHECK(j["complete_bipartite"]["graph_side"] == true);
}

TEST_CASE("sweep smoke test") {
    auto dir = temp_dir();
    auto records = (dir / "sweep1.jsonl").string();
    RunResult r = run("sweep --theorem 1 --max-v 4 --max-e 5 --jobs 2 --out " + records);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["failures"].empty());
    CHECK(std::filesystem::exists(records));
}

TEST_CASE("deterministic output") {
    RunResult a = run("generate --family CK --r 1 --n 2 --t 1");
    RunResult b = run("generate --family CK --r 1 --n 2 --t 1");
    CHECK(a.output == b.output);
    CHECK(a.exit_code == 0);
}

TEST_CASE("EULERSYM_CAP overrides the size guards") {
    auto dir = temp_dir();
    auto graph = (dir / "c6.json").string();
    REQUIRE(run("generate --family CycleN --n 6 --out " + graph).exit_code == 0);
    std::string command = "EULERSYM_CAP=4 " + std::string(CLI_BINARY) + " euler --graph " + graph;
    RunResult r = [&] {
        std::array<char, 4096> buffer{};
        std::string output;
        FILE* pipe = popen((command + " 2>&1").c_str(), "r");
        REQUIRE(pipe != nullptr);
        while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
        return RunResult{WEXITSTATUS(pclose(pipe)), output};
    }();
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("cap") != std::string::npos);
}
