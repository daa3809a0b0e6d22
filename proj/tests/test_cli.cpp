#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "tracehom/io.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string data(const char* name) { return std::string(TRACEHOM_DATA_DIR) + "/" + name; }

Run run(const std::string& args) {
    const std::string cmd = std::string(TRACEHOM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string homology_of(const std::string& out) {
    const auto doc = tracehom::json::parse(out);
    std::string s;
    for (const auto& h : doc["homology"])
        s += h["group"].get<std::string>() + ";";
    return s;
}

}  // namespace

TEST_CASE("cli analyze", "[cli]") {
    auto r = run("analyze --json " + data("pipeline_net.json"));
    REQUIRE(r.code == 0);
    CHECK(homology_of(r.out) == "Z;Z;0;");

    r = run("analyze --json " + data("three_generators.json"));
    REQUIRE(r.code == 0);
    CHECK(homology_of(r.out) == "Z;0;Z;");

    r = run("analyze --max-dim 1 --json " + data("three_generators.json"));
    REQUIRE(r.code == 0);
    CHECK(homology_of(r.out) == "Z;0;");

    r = run("analyze " + data("three_generators.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("euler characteristic: 2") != std::string::npos);
}

TEST_CASE("cli exit codes", "[cli]") {
    CHECK(run("analyze " + data("noncommuting.json")).code == 3);
    CHECK(run("verify " + data("cycle.json")).code == 5);
    CHECK(run("analyze " + data("torsion_matrix.txt")).code == 2);
    CHECK(run("analyze /nonexistent.json").code == 2);
    CHECK(run("analyze --kind graph " + data("cycle.json")).code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("cli verify", "[cli]") {
    auto r = run("verify --json " + data("three_generators.json"));
    CHECK(r.code == 0);
    CHECK(tracehom::json::parse(r.out)["match"] == true);

    r = run("verify --json " + data("single_state.json"));
    CHECK(r.code == 0);
    const auto doc = tracehom::json::parse(r.out);
    CHECK(doc["degrees"].size() == 1);
    CHECK(doc["degrees"][0]["oracle"] == "Z");

    // Firing a, b, c, d returns the pipeline to the empty marking.
    CHECK(run("verify " + data("pipeline_net.json")).code == 5);
}

TEST_CASE("cli snf", "[cli]") {
    auto r = run("snf " + data("torsion_matrix.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "rank: 2\ndivisors: 2 4\n");
    r = run("snf --json " + data("torsion_matrix.txt"));
    CHECK(tracehom::json::parse(r.out)["divisors"] == tracehom::json::array({2, 4}));
}

TEST_CASE("cli reach", "[cli]") {
    auto r = run("reach --json " + data("pipeline_net.json"));
    REQUIRE(r.code == 0);
    CHECK(tracehom::json::parse(r.out)["count"] == 8);
    r = run("reach --json --from s5 " + data("three_generators.json"));
    REQUIRE(r.code == 0);
    CHECK(tracehom::json::parse(r.out)["states"] == tracehom::json::array({"s5"}));
    CHECK(run("reach " + data("three_generators.json")).code == 2);
    CHECK(run("reach --from nope " + data("three_generators.json")).code == 2);
    CHECK(run("reach --from x " + data("pipeline_net.json")).code == 2);
}

TEST_CASE("cli dumps matrices", "[cli]") {
    const auto dir = std::filesystem::temp_directory_path() / "tracehom_dump_test";
    std::filesystem::remove_all(dir);
    const auto r = run("analyze --dump-matrices " + dir.string() + " " + data("pipeline_net.json"));
    REQUIRE(r.code == 0);
    CHECK(std::filesystem::exists(dir / "d_1.txt"));
    CHECK(std::filesystem::exists(dir / "d_2.txt"));
    std::ifstream in(dir / "d_2.json");
    const auto doc = tracehom::json::parse(in);
    CHECK(doc["rows"] == 12);
    CHECK(doc["cols"] == 4);
    std::filesystem::remove_all(dir);
}
