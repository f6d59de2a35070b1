#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dichi/pipeline.hpp"

using namespace dichi;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_pipeline(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("dichi_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("free reports the witness") {
    const std::string p4 = write_tmp("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    const Run r = run({"--json", "free", p4, "--pattern", "p4"});
    CHECK(r.code == kExitNotHFree);
    const auto rec = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(rec["witness"]["vertices"] == std::vector<int>{0, 1, 2, 3});
    CHECK(run({"free", p4, "--pattern", "q4"}).code == kExitOk);
}

TEST_CASE("dicolor on C4") {
    const std::string c4 = write_tmp("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    const Run r = run({"--json", "dicolor", c4, "--pattern", "q4", "--oracle"});
    REQUIRE(r.code == kExitOk);
    const auto rec = nlohmann::json::parse(r.out);
    CHECK(rec["certificate"] == "valid");
    CHECK(rec["budget"] == "844");
    CHECK(rec["colors_used"].get<int>() <= 844);
    CHECK(rec["exact"] == 2);
}

TEST_CASE("verify-coloring catches a monochromatic cycle") {
    const std::string c3 = write_tmp("c3.txt", "3 3\n0 1\n1 2\n2 0\n");
    const std::string bad = write_tmp("c3.col", "dicoloring 3 1 - -\n0 0\n1 0\n2 0\n");
    const Run r = run({"verify-coloring", c3, bad});
    CHECK(r.code == kExitInvalid);
    CHECK(r.out.find("cycle: [0,1,2]") != std::string::npos);
    const std::string good = write_tmp("c3ok.col", "dicoloring 3 2 - -\n0 0\n1 0\n2 1\n");
    CHECK(run({"verify-coloring", c3, good}).code == kExitOk);
}

TEST_CASE("dicolor writes a coloring that verifies") {
    const std::string g = write_tmp("gen.txt", "");
    REQUIRE(run({"gen", "hfree-greedy", "-n", "25", "-p", "0.4", "--pattern", "a4", "--seed", "3", "-o", g}).code ==
            kExitOk);
    const std::string col = (fs::temp_directory_path() / "dichi_cli_gen.col").string();
    REQUIRE(run({"dicolor", g, "--pattern", "a4", "-o", col}).code == kExitOk);
    CHECK(run({"verify-coloring", g, col}).code == kExitOk);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run({"omega", "/nonexistent/graph"}).code == kExitIo);
    CHECK(run({"omega", write_tmp("digon.txt", "2 2\n0 1\n1 0\n")}).code == kExitIo);
    CHECK(run({"nosuch"}).code == kExitIo);
    CHECK(run({"free", write_tmp("x.txt", "1 0\n"), "--pattern", "p9"}).code == kExitIo);
    const std::string tt = write_tmp("tt.txt", "3 3\n0 1\n0 2\n1 2\n");
    CHECK(run({"closed-tournament", tt}).code == kExitPrecondition);
}

TEST_CASE("gen is deterministic and json embeds the graph") {
    const Run a = run({"gen", "random-oriented", "-n", "12", "--seed", "5"});
    const Run b = run({"gen", "random-oriented", "-n", "12", "--seed", "5"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    const Run j = run({"--json", "gen", "random-oriented", "-n", "12", "--seed", "5"});
    CHECK(nlohmann::json::parse(j.out)["graph"] == a.out);
}

TEST_CASE("closed-tournament and scc text output") {
    const std::string g = write_tmp("tt3p.txt", "5 6\n0 1\n0 2\n1 2\n2 3\n3 4\n4 0\n");
    const Run r = run({"closed-tournament", g});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("path: [2,3,4,0]") != std::string::npos);
    CHECK(r.out.find("path_length: 4") != std::string::npos);
    CHECK(run({"scc", g}).code == kExitOk);
    CHECK(run({"dipolar", g, "--pattern", "p4"}).code == kExitOk);
    CHECK(run({"exact-dichi", g}).code == kExitOk);
}
