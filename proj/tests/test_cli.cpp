#include "coreparts/cli.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "coreparts");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = coreparts::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("count") {
    CHECK(run({"count", "distinct-largest", "--t", "7", "--x", "4"}).out == "7\n");
    CHECK(run({"count", "multi", "--a", "2", "--b", "3"}).out == "2\n");
    CHECK(run({"count", "tcore-parts", "--t", "3", "--l", "0"}).out == "1\n");
    CHECK(run({"count", "tcore-parts", "--t", "4", "--l", "2"}).out == "6\n");
    CHECK(run({"count", "consecutive", "--s", "5", "--r", "2", "--stat", "M"}).out == "6\n");
    CHECK(run({"count", "consecutive", "--s", "4", "--r", "1", "--stat", "T"}).out == "70\n");
    CHECK(run({"count", "multi", "--a", "4", "--b", "3", "--extra", "5,6"}).out == "4\n");
    CHECK(run({"count", "kreweras", "--lambda", "2,1"}).out == "5\n");
    CHECK(run({"count", "tcores", "--t", "3", "--n", "6"}).out == "2\n");
    CHECK(run({"count", "distinct-consecutive", "--s", "10"}).out == "89\n");
    CHECK(run({"--format", "json", "count", "catalan", "--a", "3", "--b", "4"}).out ==
          "{\"family\":\"catalan\",\"value\":5}\n");
}

TEST_CASE("count errors") {
    const Run missing = run({"count", "tcore-parts", "--t", "3"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--l") != std::string::npos);
    CHECK(run({"count", "nonsense"}).code == 2);
    CHECK(run({"count", "multi", "--a", "4", "--b", "6"}).code == 2);
    CHECK(run({"count", "consecutive", "--s", "4", "--r", "1", "--stat", "Q"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"count", "tcore-parts", "--t", "x"}).code == 2);
}

TEST_CASE("enumerate") {
    CHECK(run({"enumerate", "ab-cores", "--a", "2", "--b", "3"}).out == "1\n-\n");
    const Run five = run({"enumerate", "distinct-consecutive", "--s", "4"});
    CHECK(five.out == "-\n1\n2\n3\n2,1\n");
    CHECK(run({"enumerate", "tcores", "--t", "3", "--n", "0"}).out == "-\n");
    CHECK(run({"enumerate", "tcores", "--t", "2", "--n", "6"}).out == "3,2,1\n");
    CHECK(run({"enumerate", "tcore-parts", "--t", "3", "--l", "1"}).out == "2\n1\n");
    CHECK(run({"--format", "json", "enumerate", "ab-cores", "--a", "2", "--b", "3"}).out == "[[1],[]]\n");
    CHECK(run({"enumerate", "psi", "--t", "3", "--d", "2", "--k", "0", "--l", "1"}).code == 0);
}

TEST_CASE("series") {
    const Run two = run({"series", "tcores", "--t", "2", "--order", "10"});
    CHECK(two.out == "0 1\n1 1\n2 0\n3 1\n4 0\n5 0\n6 1\n7 0\n8 0\n9 0\n10 1\n");
    CHECK(run({"series", "self-conjugate", "--t", "3", "--order", "20", "--check"}).out == "OK\n");
    CHECK(run({"series", "tcores", "--t", "4", "--order", "20", "--check"}).out == "OK\n");
    CHECK(run({"series", "tcores", "--t", "1", "--order", "5"}).out == "0 1\n1 0\n2 0\n3 0\n4 0\n5 0\n");
    CHECK(run({"series", "tcores-charge", "--t", "2", "--order", "3", "--format", "csv"}).out ==
          "n,coefficient\n0,1\n1,1\n2,0\n3,1\n");
    CHECK(run({"series", "tcores-tree", "--t", "2", "--order", "3", "--format", "json"}).out == "[1,1,0,1]\n");
    CHECK(run({"series", "bogus", "--t", "2", "--order", "3"}).code == 2);
}

TEST_CASE("table") {
    const Run full = run({"table", "distinct", "--tmax", "10", "--xmax", "10"});
    CHECK(full.code == 0);
    std::istringstream lines(full.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "t,0,1,2,3,4,5,6,7,8,9,10");
    CHECK(first == "2,1,1,1,1,1,1,1,1,1,1,1");
    CHECK(full.out.find("\n8,1,1,2,4,8,12,") != std::string::npos);
    CHECK(run({"table", "distinct", "--tmax", "2", "--xmax", "0"}).out == "t,0\n2,1\n");
    CHECK(run({"--jobs", "3", "table", "distinct", "--tmax", "10", "--xmax", "10"}).out == full.out);
}

TEST_CASE("verify") {
    const Run ok = run({"verify", "eq1-vs-oracle", "--envelope", "small"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("PASS eq1-vs-oracle", 0) == 0);
    CHECK(run({"verify", "consecutive-recurrences"}).code == 0);
    CHECK(run({"verify", "nothing"}).code == 2);
    CHECK(run({"verify", "anderson", "--envelope", "medium"}).code == 2);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"enumerate", "multi", "--a", "5", "--b", "6", "--extra", "7"};
    CHECK(run(args).out == run(args).out);
}
