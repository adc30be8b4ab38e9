#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "padic/cli.hpp"

using namespace padic;
using namespace padic::cli;
using report::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp_lambda(const std::string& body) {
    std::string path = std::string("/tmp/padic_lambda_") + std::to_string(::rand()) + ".json";
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_CASE("classify periodic2: JSON report shape") {
    auto r = run_cli({"classify", "periodic2", "--p", "5", "--theta", "1/5", "--json"});
    REQUIRE(r.code == kOk);
    json j = json::parse(r.out);
    CHECK(j["command"] == "classify periodic2");
    const json& res = j["result"];
    CHECK(res["table_count"] == 2);
    CHECK(res["oracle_count"] == 2);
    CHECK(res["consistent"] == true);
    CHECK(res["kind"] == "periodic2");
    CHECK(res["rule"]["table"] == "NPer2");
    REQUIRE(res["roots"].is_array());
    CHECK(res["roots"].size() == 2);
    const json& root = res["roots"][0];
    CHECK(root.contains("valuation"));
    CHECK(root.contains("digits"));
    CHECK(root.contains("precision"));
    CHECK(root["prime"] == 5);
}

TEST_CASE("classify fixed: theta = 4 includes z = 1") {
    auto r = run_cli({"classify", "fixed", "--p", "7", "--theta", "4", "--json"});
    REQUIRE(r.code == kOk);
    json j = json::parse(r.out);
    bool has_one = false;
    for (const auto& root : j["result"]["roots"]) {
        if (root["is_zero"] == true) continue;
        if (root["valuation"] != 0) continue;
        auto d = root["digits"];
        bool one = d[0] == 1;
        for (std::size_t i = 1; i < d.size(); ++i) one = one && d[i] == 0;
        has_one = has_one || one;
    }
    CHECK(has_one);
}

TEST_CASE("exit codes: invalid input, strict mismatch, precision range") {
    CHECK(run_cli({"classify", "fixed", "--p", "6", "--theta", "2"}).code == kInvalidInput);
    CHECK(run_cli({"classify", "fixed", "--p", "7", "--theta", "x"}).code == kInvalidInput);
    CHECK(run_cli({"classify", "periodic2", "--p", "7", "--theta", "4"}).code == kInvalidInput);
    CHECK(run_cli({"classify", "fixed", "--p", "7", "--theta", "2", "--precision", "3"}).code == kInvalidInput);
    CHECK(run_cli({"classify", "fixed", "--p", "7", "--theta", "2", "--precision", "201"}).code == kInvalidInput);
    CHECK(run_cli({"nonsense"}).code == kInvalidInput);

    // theta = 5 at p = 2: printed table says 2, oracle 0 -> strict exit 3
    CHECK(run_cli({"classify", "periodic2", "--p", "2", "--theta", "5"}).code == kOk);
    CHECK(run_cli({"classify", "periodic2", "--p", "2", "--theta", "5", "--strict"}).code == kMismatch);
}

TEST_CASE("solve cubic and roots") {
    auto r = run_cli({"solve", "cubic", "--p", "5", "--a", "-1/3", "--b", "29/27", "--json"});
    REQUIRE(r.code == kOk);
    json j = json::parse(r.out);
    CHECK(j["result"]["table_count"] == 0);
    CHECK(j["result"]["oracle_count"] == 0);
    CHECK(j["result"]["consistent"] == true);

    auto rv = run_cli({"solve", "cubic", "--p", "5", "--a", "-1/3", "--b", "29/27", "--json",
                       "--verbatim-tables"});
    json jv = json::parse(rv.out);
    CHECK(jv["result"]["table_count"] == 1);
    CHECK(jv["result"]["consistent"] == false);

    auto rr = run_cli({"roots", "--p", "7", "--poly", "1,2,1,-2", "--json"});
    REQUIRE(rr.code == kOk);
    json jr = json::parse(rr.out);
    CHECK(jr["result"]["count"] == 1);
    CHECK(jr["result"]["roots"][0]["digits"][0] == 4);

    CHECK(run_cli({"roots", "--p", "5", "--poly", "0,1,-2,1"}).code == kInvalidInput);  // (x-1)^2
}

TEST_CASE("legendre command") {
    auto r = run_cli({"legendre", "--a", "2", "--p", "7", "--json"});
    json j = json::parse(r.out);
    CHECK(j["result"]["symbol"] == 1);
    CHECK(run_cli({"legendre", "--a", "3", "--p", "7"}).out == "(3/7) = -1\n");
    CHECK(run_cli({"legendre", "--a", "3", "--p", "2"}).code == kInvalidInput);
}

TEST_CASE("ggm count and gibbs check read activity files") {
    std::string path = write_temp_lambda(R"({"entries": ["2"]})");
    auto r = run_cli({"ggm", "count", "--p", "7", "--lambda", path, "--json"});
    REQUIRE(r.code == kOk);
    json j = json::parse(r.out);
    CHECK(j["result"]["table_count"] == 1);
    CHECK(j["result"]["rule"]["table"] == "TR1");

    auto r2 = run_cli({"ggm", "count", "--p", "7", "--lambda", path, "--kind", "periodic2", "--json"});
    json j2 = json::parse(r2.out);
    CHECK(j2["result"]["table_count"] == 0);
    CHECK(j2["result"]["rule"]["table"] == "Tp");

    auto r3 = run_cli({"gibbs", "check", "--p", "7", "--k", "2", "--depth", "2", "--lambda", path,
                       "--precision", "24", "--json"});
    REQUIRE(r3.code == kOk);
    json j3 = json::parse(r3.out);
    CHECK(j3["result"]["fixed_point_count"] == 1);
    CHECK(j3["result"]["roots"][0].contains("compatibility_residual"));
    CHECK(j3["result"]["roots"][0]["nonexistence_witness"].get<int>() >= 1);

    CHECK(run_cli({"ggm", "count", "--p", "7", "--lambda", "/nonexistent.json"}).code == kInvalidInput);
    std::string bad = write_temp_lambda(R"({"entries": [1.5]})");
    CHECK(run_cli({"ggm", "count", "--p", "7", "--lambda", bad}).code == kInvalidInput);
    std::remove(path.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("validate: determinism and the p = 2 errata anchors") {
    auto a = run_cli({"validate", "--p", "2", "--table", "Tp2", "--samples", "80", "--seed", "42", "--json"});
    auto b = run_cli({"validate", "--p", "2", "--table", "Tp2", "--samples", "80", "--seed", "42", "--json"});
    REQUIRE(a.code == kOk);
    CHECK(a.out == b.out);

    json j = json::parse(a.out);
    bool saw2 = false, saw5 = false;
    for (const auto& rec : j["result"]["records"]) {
        if (rec["instance"]["theta"] == "2") saw2 = true;
        if (rec["instance"]["theta"] == "5") saw5 = true;
    }
    CHECK(saw2);
    CHECK(saw5);

    auto c = run_cli({"validate", "--p", "2", "--table", "Tp2", "--samples", "80", "--seed", "43", "--json"});
    CHECK(a.out != c.out);

    CHECK(run_cli({"validate", "--p", "2", "--table", "Tp2", "--samples", "10", "--strict"}).code == kMismatch);
    CHECK(run_cli({"validate", "--p", "7", "--table", "Tp2", "--samples", "10"}).code == kInvalidInput);
    CHECK(run_cli({"validate", "--p", "7", "--table", "bogus", "--samples", "10"}).code == kInvalidInput);
}

TEST_CASE("validate: corrected tables agree with the oracle") {
    auto r = run_cli({"validate", "--p", "7", "--table", "Nsol", "--samples", "60", "--seed", "11", "--json"});
    REQUIRE(r.code == kOk);
    json j = json::parse(r.out);
    CHECK(j["result"]["mismatches"] == 0);

    auto r2 = run_cli({"validate", "--p", "5", "--table", "NPer2", "--samples", "60", "--seed", "11", "--json"});
    CHECK(json::parse(r2.out)["result"]["mismatches"] == 0);
}

TEST_CASE("PADIC_PRECISION env override") {
    ::setenv("PADIC_PRECISION", "12", 1);
    auto r = run_cli({"classify", "periodic2", "--p", "5", "--theta", "1/5", "--json"});
    json j = json::parse(r.out);
    CHECK(j["result"]["roots"][0]["precision"].get<int>() >= 12);
    ::setenv("PADIC_PRECISION", "1", 1);
    CHECK(run_cli({"classify", "fixed", "--p", "7", "--theta", "2"}).code == kInvalidInput);
    ::unsetenv("PADIC_PRECISION");
}

TEST_CASE("help exits cleanly") {
    auto r = run_cli({"--help"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("classify") != std::string::npos);
}
