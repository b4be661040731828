#include "ck/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ck::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / ("ck_cli_test_" + name);
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run({"verify-cw", "--kind", "sp", "--n", "3", "--j", "1,iota,1"}).code == 0);
    CHECK(run({"contract", "--kind", "so", "--n", "5", "--iota", "3"}).code == 2);
    CHECK(run({"contract", "--kind", "xx", "--n", "5"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify-cw", "--kind", "so", "--n", "5", "--j", "1,1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("contract reproduces the so(5) example and is deterministic") {
    auto a = run({"contract", "--kind", "so", "--n", "5", "--iota", "2", "--json"});
    auto b = run({"contract", "--kind", "so", "--n", "5", "--iota", "2", "--json"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["status"] == "pass");
    CHECK(j["sections"][1]["data"]["structure"] == "T6 ⋉ (H1 ⊕ so(3;j3,j4))");
    CHECK(j.dump(2) + "\n" == a.out);  // keys already sorted
}

TEST_CASE("relcat compose of identities") {
    std::string id = R"({"source_dim": 2, "target_dim": 2, "basis": [["1","0","1","0"],["0","1","0","1"]]})";
    std::string p = temp_file("id.json", id);
    auto r = run({"relcat", "compose", "--cat", "GA", "--p", p, "--q", p});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(id));
    std::string bad = temp_file("bad.json", R"({"source_dim": 1, "target_dim": 1, "basis": [["1"]]})");
    CHECK(run({"relcat", "compose", "--p", bad, "--q", bad}).code == 2);
}

TEST_CASE("check-orth") {
    std::string id = temp_file("m1.json", R"({"entries": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
    std::string sh = temp_file("m2.json", R"({"entries": [["1","I1","0"],["0","1","0"],["0","0","1"]]})");
    CHECK(run({"check-orth", "--matrix", id, "--j", "1,iota"}).code == 0);
    CHECK(run({"check-orth", "--matrix", sh, "--j", "1,iota"}).code == 1);
}

TEST_CASE("spin honours the dimension cap") {
    std::string p = temp_file("gd.json", R"({"source_dim": 4, "target_dim": 4, "basis": [["1","0","0","0","1","0","0","0"],["0","1","0","0","0","1","0","0"],["0","0","1","0","0","0","1","0"],["0","0","0","1","0","0","0","1"]]})");
    CHECK(run({"spin", "--p", p}).code == 0);
    CHECK(run({"--max-dim", "2", "spin", "--p", p}).code == 2);
}

TEST_CASE("selftest report and the injected sign flip") {
    auto ok = run({"selftest", "--criteria", "8", "--json"});
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["status"] == "pass");
    auto bad = run({"selftest", "--criteria", "1", "--inject-sign-flip"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[H1, E[e1]]") != std::string::npos);
}

TEST_CASE("lowering report") {
    auto r = run({"rep", "lower", "--family", "A", "--j", "2", "--from", "3", "--to", "2", "--json"});
    REQUIRE(r.code == 0);
    auto d = nlohmann::json::parse(r.out)["sections"][0]["data"];
    CHECK(d["dim_lowered"] == 3);
    CHECK(d["branch"] == "maximal-extension");
}
