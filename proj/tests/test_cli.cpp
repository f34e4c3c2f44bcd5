#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(GRAPHCOMP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("verify-gates passes and exits 0") {
    CliResult r = run_cli("verify-gates --trials 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("AND1 pass") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify-gates --filter NOT1 reports two rows") {
    CliResult r = run_cli("--json verify-gates --filter NOT1 --trials 2");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("schema_version") == 1);
    REQUIRE(j.at("reports").size() == 1);
    CHECK(j.at("reports")[0].at("rows").size() == 2);
}

TEST_CASE("verify-gates with an unknown filter exits 2") {
    CHECK(run_cli("verify-gates --filter NOSUCH").status == 2);
}

TEST_CASE("run on a missing file exits 2") {
    CHECK(run_cli("run missing.json 5").status == 2);
}

TEST_CASE("run on a malformed document exits 2") {
    std::string path = "/tmp/graphcomp_bad_machine.json";
    std::ofstream(path) << "{ not json";
    CHECK(run_cli("run " + path + " 0").status == 2);
    std::ofstream(path) << R"({"nodes": [], "edges": [], "rule": "nosuch"})";
    CHECK(run_cli("run " + path + " 0").status == 2);
    std::remove(path.c_str());
}

TEST_CASE("run executes a stored machine") {
    std::string path = "/tmp/graphcomp_machine.json";
    std::ofstream(path) << R"({"nodes": [0, 1], "edges": [],
        "node_labels": {"0": 4, "1": 5}, "rule": "identity"})";
    CliResult r = run_cli("--json run " + path + " 0");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("outcome") == "halted");
    CHECK(j.at("value") == 9);
    std::remove(path.c_str());
}

TEST_CASE("staircase validates its range and counts plateaus") {
    CHECK(run_cli("staircase --points 1").status == 2);
    CliResult flat = run_cli("staircase --K 0 --points 11");
    CHECK(flat.status == 0);
    CHECK(flat.out.find("0 plateaus") != std::string::npos);
}

TEST_CASE("staircase writes the CSV") {
    std::string path = "/tmp/graphcomp_stairs.csv";
    CliResult r = run_cli("staircase --K 1 --points 21 --out " + path);
    CHECK(r.status == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "omega,K,rho,locked,p,q");
    std::remove(path.c_str());
}

TEST_CASE("cycle-nand prints four matching rows") {
    CliResult r = run_cli("--json cycle-nand");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.at("rows").size() == 4);
    CHECK(j.at("pass") == true);
}

TEST_CASE("ram-demo verifies every location") {
    CliResult r = run_cli("ram-demo --address-bits 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("4/4 locations verified") != std::string::npos);
}

TEST_CASE("life rejects unknown patterns and runs a blinker") {
    CHECK(run_cli("life --pattern wavy").status == 2);
    CliResult r = run_cli("--json life --pattern blinker --width 3 --height 3 --steps 2");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j.at("frames").size() == 3);
    CHECK(j.at("frames")[0] == j.at("frames")[2]);
    CHECK(j.at("frames")[0] != j.at("frames")[1]);
}

TEST_CASE("same seed gives byte-identical output") {
    std::string args = "--seed 99 --json life --pattern random --steps 5";
    CHECK(run_cli(args).out == run_cli(args).out);
    std::string vg = "--seed 7 verify-gates --trials 3";
    CHECK(run_cli(vg).out == run_cli(vg).out);
}
