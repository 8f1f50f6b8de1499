#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bch/cli.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = bch::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("coeff on words") {
    CHECK(run_cli({"coeff", "AB"}).out == "1/2\n");
    CHECK(run_cli({"coeff", "A"}).out == "1\n");
    CHECK(run_cli({"coeff", "AA"}).out == "0\n");
    CHECK(run_cli({"coeff", "ABA"}).out == "-1/6\n");
    CHECK(run_cli({"coeff", "AB"}).code == 0);
}

TEST_CASE("coeff on blocks") {
    CHECK(run_cli({"coeff", "--blocks", "2,1"}).out == "1/12\n");
    CHECK(run_cli({"coeff", "--blocks", "2,1", "--bfirst"}).out == "1/12\n");
    CHECK(run_cli({"coeff", "--blocks", "1,1,1", "--bfirst"}).out == "-1/6\n");

    // Word form and blocks form print identical bytes.
    const CliResult by_word = run_cli({"coeff", "ABB"});
    const CliResult by_blocks = run_cli({"coeff", "--blocks", "1,2", "--afirst"});
    CHECK(by_word.out == by_blocks.out);
    CHECK(by_word.code == by_blocks.code);
}

TEST_CASE("coeff formats") {
    CHECK(run_cli({"coeff", "AB", "--format", "tsv"}).out ==
          "word\tn\tnumerator\tdenominator\nAB\t2\t1\t2\n");
    const CliResult json = run_cli({"coeff", "BBA", "--format", "json"});
    const nlohmann::json row = nlohmann::json::parse(json.out);
    CHECK(row["word"] == "BBA");
    CHECK(row["n"] == 3);
    CHECK(row["num"] == "1");
    CHECK(row["den"] == "12");
}

TEST_CASE("coeff usage errors") {
    CHECK(run_cli({"coeff"}).code == 2);
    CHECK(run_cli({"coeff", "AXB"}).code == 2);
    CHECK(run_cli({"coeff", "AB", "--blocks", "1,1"}).code == 2);
    CHECK(run_cli({"coeff", "--blocks", "1,x"}).code == 2);
    CHECK(run_cli({"coeff", "--blocks", "0,1"}).code == 2);
    CHECK(run_cli({"coeff", "AB", "--bfirst"}).code == 2);
    CHECK(run_cli({"coeff", "AB", "--backend", "wide"}).code == 2);
}

TEST_CASE("forced fixed backend is rejected up front beyond its range") {
    const CliResult r = run_cli({"coeff", std::string(19, 'A'), "--backend", "64"});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "--backend 128"));
    CHECK(run_cli({"coeff", std::string(18, 'A'), "--backend", "64"}).code == 3);
    CHECK(run_cli({"coeff", std::string(18, 'A'), "--backend", "128"}).code == 0);
}

TEST_CASE("dn") {
    const CliResult r = run_cli({"dn", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "d_13 = 210\n13! * d_13 = 1307674368000\n");
    CHECK(run_cli({"dn", "13", "--format", "tsv"}).out ==
          "n\td_n\tn_factorial_times_d_n\n13\t210\t1307674368000\n");
    const nlohmann::json row = nlohmann::json::parse(run_cli({"dn", "13", "--format", "json"}).out);
    CHECK(row["dn"] == "210");
    CHECK(row["common_denominator"] == "1307674368000");
    CHECK(run_cli({"dn", "0"}).code == 2);
    CHECK(run_cli({"dn"}).code == 2);
}

TEST_CASE("table") {
    const CliResult r = run_cli({"table", "3", "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n\tpartition\tnumerator\tdenominator\n"
          "1\t1\t1\t1\n"
          "2\t2\t0\t1\n"
          "2\t1,1\t1\t2\n"
          "3\t3\t0\t1\n"
          "3\t2,1\t1\t12\n"
          "3\t1,1,1\t-1\t6\n");
    CHECK(contains(r.err, "partitions: 6"));
    CHECK(contains(r.err, "coefficient time:"));

    CHECK(run_cli({"table", "1"}).out == "n\tpartition\tnumerator\tdenominator\n1\t1\t1\t1\n");

    const nlohmann::json root =
        nlohmann::json::parse(run_cli({"table", "5", "--format", "json"}).out);
    CHECK(root.size() == 18);  // p(1) + ... + p(5)
}

TEST_CASE("table row count equals the partition count") {
    const CliResult r = run_cli({"table", "9"});
    std::size_t rows = 0;
    for (char c : r.out)
        rows += (c == '\n');
    CHECK(rows == 96 + 1);  // p(1) + ... + p(9) = 96 data rows plus the header
}

TEST_CASE("table --out writes the file and keeps stdout clean") {
    const std::string path = "cli_table_out_test.tsv";
    const CliResult r = run_cli({"table", "3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(contains(content.str(), "3\t2,1\t1\t12\n"));
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("dynkin") {
    const CliResult r = run_cli({"dynkin", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/4 [AB]\n-1/4 [BA]\n");
    CHECK(run_cli({"dynkin", "2", "--format", "tsv"}).out ==
          "word\tnumerator\tdenominator\nAB\t1\t4\nBA\t-1\t4\n");
    const nlohmann::json root =
        nlohmann::json::parse(run_cli({"dynkin", "1", "--format", "json"}).out);
    REQUIRE(root.size() == 2);
    CHECK(root[0]["word"] == "A");
    CHECK(root[0]["num"] == "1");
    CHECK(root[0]["den"] == "1");
}

TEST_CASE("verify") {
    const CliResult r = run_cli({"verify", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verify: PASS"));
    CHECK(contains(r.out, "oracle agreement"));
    CHECK(contains(r.out, "denominator lcm"));
    CHECK(contains(r.out, "dynkin identity"));
    CHECK(contains(r.out, "block symmetry"));
    CHECK(run_cli({"verify", "1"}).code == 0);
}

TEST_CASE("bench") {
    const CliResult r = run_cli({"bench", "6", "--reps", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "partitions: 29"));
    CHECK(contains(r.out, "min:"));
    CHECK(contains(r.out, "median:"));
    // A fixed backend beyond its range still completes, with a warning.
    const CliResult wrap = run_cli({"bench", "18", "--backend", "64", "--reps", "1"});
    CHECK(wrap.code == 0);
    CHECK(contains(wrap.err, "warning"));
}

TEST_CASE("usage basics") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    const CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "coeff"));
    CHECK(contains(help.out, "bench"));
}
