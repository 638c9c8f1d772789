#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "horadam/cli.hpp"

using namespace horadam;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

void check_schema(const nlohmann::json& doc) {
    REQUIRE(doc.is_object());
    CHECK(doc.size() == 6);
    CHECK(doc.at("identity").is_string());
    CHECK(doc.at("grid").is_string());
    CHECK(doc.at("cases_total").is_number_unsigned());
    CHECK(doc.at("cases_checked").is_number_unsigned());
    CHECK(doc.at("cases_skipped_precondition").is_number_unsigned());
    REQUIRE(doc.at("counterexamples").is_array());
    for (const auto& cx : doc["counterexamples"]) {
        CHECK(cx.size() == 3);
        REQUIRE(cx.at("bindings").is_object());
        for (const auto& [k, v] : cx["bindings"].items()) CHECK(v.is_number_integer());
        CHECK(cx.at("lhs").is_string());
        CHECK(cx.at("rhs").is_string());
    }
}

}  // namespace

TEST_CASE("eval") {
    CHECK(run({"eval", "--seq", "fibonacci", "-n", "8"}).out == "21\n");
    CHECK(run({"eval", "--p", "1", "--q", "2", "--g0", "0", "--g1", "1", "-n", "-5"}).out == "11/32\n");
    CHECK(run({"eval", "--seq", "fibonacci", "-n", "0"}).out == "0\n");
    CHECK(run({"eval", "--p", "1/2", "--q", "-3/4", "--g0", "1", "--g1", "1", "-n", "3"}).out == "-7/8\n");

    for (const auto& bad : std::vector<std::vector<std::string>>{
             {"eval"},
             {"eval", "-n", "3"},
             {"eval", "--seq", "nope", "-n", "3"},
             {"eval", "--seq", "fibonacci", "--p", "1", "-n", "3"},
             {"eval", "--p", "1", "--q", "1", "-n", "3"},
             {"eval", "--p", "0", "--q", "1", "--g0", "0", "--g1", "1", "-n", "3"},
             {"eval", "--p", "1.5", "--q", "1", "--g0", "0", "--g1", "1", "-n", "3"},
             {"eval", "--seq", "fibonacci", "-n", "x"},
             {"eval", "--seq", "fibonacci", "-n", "99999999999"},
         }) {
        const auto r = run(bad);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("table") {
    const auto all = run({"table", "--all", "--from", "-5", "--to", "8", "--format", "csv"});
    CHECK(all.code == 0);
    std::istringstream lines(all.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,fibonacci,lucas,pell,pell-lucas,jacobsthal,jacobsthal-lucas");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 14);
    CHECK(all.out.find("-5,5,-11,29,-82,11/32,-31/32\n") != std::string::npos);

    CHECK(run({"table", "--seq", "lucas", "--from", "0", "--to", "0"}).out == "n,lucas\n0,2\n");
    CHECK(run({"table", "--seq", "jacobsthal-lucas", "--from", "-4", "--to", "-4"}).out ==
          "n,jacobsthal-lucas\n-4,17/16\n");
    CHECK(run({"table", "--seq", "lucas", "--from", "1", "--to", "0"}).code == 2);
    CHECK(run({"table", "--from", "1", "--to", "2"}).code == 2);

    const auto js = nlohmann::json::parse(run({"table", "--seq", "pell", "--from", "-1", "--to", "1", "--format", "json"}).out);
    CHECK(js["rows"].size() == 3);
    CHECK(js["rows"][0]["pell"] == "1");
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--identity", "theorem1", "--seq", "fibonacci", "--h-seq", "lucas"});
    CHECK(ok.code == 0);
    const auto doc = nlohmann::json::parse(ok.out);
    check_schema(doc);
    CHECK(doc["cases_total"] == 30625);
    CHECK(doc["counterexamples"].empty());

    const auto grid = run({"verify", "--identity", "theorem1", "--grid", "n=-2..2,m=-2..2,a=0..1,b=0..1,c=0..1,d=0..1"});
    CHECK(nlohmann::json::parse(grid.out)["cases_total"] == 400);

    const auto skip = run({"verify", "--identity", "sum-ordinary:1", "--seq", "fibonacci", "--h-seq", "fibonacci",
                           "--grid", "n=-1..1,m=1,a=0,b=1,c=0,d=1,k=0..2"});
    CHECK(skip.code == 0);
    CHECK(nlohmann::json::parse(skip.out)["cases_skipped_precondition"].get<int>() >= 1);

    CHECK(run({"verify", "--identity", "corollary", "--seq", "pell", "--h0", "3", "--h1", "-1/2"}).code == 0);
    CHECK(run({"verify", "--identity", "lemma3:2", "--seq", "jacobsthal-lucas", "--format", "text"}).code == 0);

    CHECK(run({"verify", "--identity", "theorem9"}).code == 2);
    CHECK(run({"verify", "--identity", "theorem1", "--seq", "fibonacci", "--h-seq", "pell"}).code == 2);
    CHECK(run({"verify", "--identity", "theorem1", "--grid", "n=0..1"}).code == 2);
    CHECK(run({"verify", "--identity", "corollary", "--f1", "2"}).code == 2);
    CHECK(run({"verify", "--identity", "lemma2:1", "--seq", "fibonacci", "--f1", "2", "--grid", "n=0..2,k=0..2"}).code == 2);
    CHECK(run({"verify", "--identity", "theorem1", "--format", "xml"}).code == 2);
}

TEST_CASE("catalog") {
    const auto list = run({"catalog", "list"});
    CHECK(list.code == 0);
    std::istringstream lines(list.out);
    int n = 0;
    for (std::string line; std::getline(lines, line); ++n) CHECK(line.find('\t') != std::string::npos);
    CHECK(n >= 40);

    CHECK(run({"catalog", "run", "fib.catalan", "--grid", "n=0..8,m=0..8"}).code == 0);
    const auto bad = run({"catalog", "run", "fib.catalna"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("fib.catalan") != std::string::npos);
    CHECK(run({"catalog", "run", "nosuch.id"}).code == 2);
    CHECK(run({"catalog", "run", "fib.catalan", "--h0", "1", "--h1", "1"}).code == 2);
    CHECK(run({"catalog", "run", "fib.master", "--h0", "1"}).code == 2);
    CHECK(run({"catalog", "run", "jac.master", "--grid", "n=-3..3,m=-3..3,a=-2..2,b=-2..2", "--h0", "3", "--h1", "5"})
              .code == 0);
    CHECK(run({"catalog"}).code == 2);
}

TEST_CASE("check") {
    const char* catalan = "F[n-m]*F[n+m] = F[n]^(2) + (-1)^(n+m+1)*F[m]^(2)";
    CHECK(run({"check", "--expr", catalan, "--grid", "n=0..6,m=0..6"}).code == 0);

    const auto wrong = run({"check", "--expr", "F[n+1]=F[n]", "--grid", "n=0..3"});
    CHECK(wrong.code == 1);
    const auto doc = nlohmann::json::parse(wrong.out);
    check_schema(doc);
    CHECK(doc["counterexamples"][0]["bindings"]["n"] == 0);
    CHECK(doc["counterexamples"][0]["lhs"] == "1");
    CHECK(doc["counterexamples"][0]["rhs"] == "0");

    const auto parse = run({"check", "--expr", "F[n"});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("column 4") != std::string::npos);

    CHECK(run({"check", "--expr", "G[n+2] = G[n+1] + 6*G[n]", "--let", "G=1,6,1,1", "--grid", "n=-4..4"}).code == 0);
    CHECK(run({"check", "--expr", "G[n] = 1", "--let", "G=1,6,1", "--grid", "n=0"}).code == 2);
    CHECK(run({"check", "--expr", "X[n] = 1", "--grid", "n=0"}).code == 2);
    CHECK(run({"check", "--expr", "F[n] = 1"}).code == 2);
    CHECK(run({"check", "--expr", "F[n] = 1", "--file", "x"}).code == 2);
    CHECK(run({"check", "--file", "/nonexistent/identity.txt", "--grid", "n=0"}).code == 2);
    CHECK(run({"check", "--expr", "F[n] = 0^(-1)", "--grid", "n=0"}).code == 2);
    CHECK(run({"check", "--expr", "F[10^(18)] = 1", "--grid", ""}).code == 2);
}

TEST_CASE("output file and determinism") {
    const std::string path = "cli_test_output.json";
    const std::vector<std::string> args = {"verify", "--identity", "sum-binomial:3", "--seq", "pell", "--output", path};
    const auto first = run(args);
    CHECK(first.code == 0);
    CHECK(first.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    check_schema(nlohmann::json::parse(buf.str()));
    std::remove(path.c_str());

    const std::vector<std::string> again = {"check", "--expr", "L[n] = F[n-1] + F[n+1] + n", "--grid", "n=-3..3",
                                            "--format", "csv"};
    CHECK(run(again).out == run(again).out);
    CHECK(run(again).code == 1);
}

TEST_CASE("help") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}
