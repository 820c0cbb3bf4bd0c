//
// Project     : speclim
// File        : tests/test_cli.cpp
// Description : in-process tests of the command-line surface: output
//               shapes, determinism, configuration, and failure paths
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <doctest.h>

#include <speclim/cli.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string temp_path(const char* suffix)
{
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    return (dir / ("speclim_test_" + std::to_string(++counter) + suffix)).string();
}

struct RunOutcome {
    int         code;
    std::string out;
    std::string err;
};

RunOutcome run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = speclim::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("polynomial evaluation prints a csv table and succeeds")
{
    const auto result = run({"specfun", "eval", "--jacobi", "2,0,0", "--x", "0"});
    CHECK(result.code == 0);
    CHECK(contains(result.out, "# table: evaluation"));
    CHECK(contains(result.out, "family,degree,alpha,beta,x,value"));
    CHECK(contains(result.out, "jacobi,2,0,0,0,-0.5"));
    CHECK(contains(result.out, "# pass: true"));
}

TEST_CASE("exact tables carry fraction-valued cells")
{
    const auto exponents = run({"heis", "exponents", "--n", "2"});
    CHECK(exponents.code == 0);
    CHECK(contains(exponents.out, "10/7"));   // critical exponent
    CHECK(contains(exponents.out, "-1/10"));  // profile value at the breakpoint

    const auto divisors = run({"heis", "dN", "--n", "2", "--N", "12"});
    CHECK(divisors.code == 0);
    CHECK(contains(divisors.out, "12,1,8")); // N, d(N), mode count
}

TEST_CASE("identity check over a range reports exact agreement")
{
    const auto result = run({"heis", "qn-check", "--n", "1", "--N", "1:40"});
    CHECK(result.code == 0);
    CHECK(contains(result.out, "40/40"));
    CHECK(contains(result.out, "PASS (exact)"));
}

TEST_CASE("json rendering is versioned and structured")
{
    const auto result =
        run({"--format", "json", "heis", "exponents", "--n", "1"});
    CHECK(result.code == 0);
    CHECK(result.out.front() == '{');
    CHECK(contains(result.out, "\"schema_version\": 1"));
    CHECK(contains(result.out, "\"command\": \"heis exponents\""));
    CHECK(contains(result.out, "\"pass\": true"));
    CHECK(contains(result.out, "6/5"));
}

TEST_CASE("byte-identical output across repeated invocations")
{
    const std::vector<std::string> args = {"contract", "limit", "--n", "1",
                                           "--m", "1", "--k", "0", "--nu", "16,64"};
    const auto first  = run(args);
    const auto second = run(args);
    CHECK(first.code == 0);
    CHECK(second.code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("global flags are accepted after the subcommand")
{
    const auto result = run({"specfun", "eval", "--laguerre", "0,0", "--x", "7",
                             "--format", "json"});
    CHECK(result.code == 0);
    CHECK(result.out.front() == '{');
}

TEST_CASE("configuration file reproduces a flag run")
{
    const std::string path = temp_path(".ini");
    {
        std::ofstream config(path);
        config << "[contract.lemma2]\n"
               << "n = 1\np = 2\nnu = \"16,64\"\n";
    }
    const auto from_config = run({"--config", path, "contract", "lemma2"});
    const auto from_flags  = run({"contract", "lemma2", "--n", "1", "--p", "2",
                                  "--nu", "16,64"});
    std::remove(path.c_str());
    CHECK(from_config.code == 0);
    CHECK(from_config.out == from_flags.out);
}

TEST_CASE("failures surface as nonzero exits with messages on the error stream")
{
    const auto unknown = run({"frobnicate"});
    CHECK(unknown.code != 0);

    const auto missing = run({"specfun", "eval", "--x", "1"});
    CHECK(missing.code != 0);
    CHECK_FALSE(contains(missing.out, "# pass: true"));

    const auto bad_format = run({"--format", "yaml", "heis", "exponents", "--n", "1"});
    CHECK(bad_format.code != 0);

    const auto bad_range = run({"heis", "qn-check", "--n", "1", "--N", "9:3"});
    CHECK(bad_range.code != 0);
    CHECK(contains(bad_range.err, "error"));

    // chart overflow: diagnostic names the smallest workable scale
    const auto overflow = run({"contract", "lemma2", "--n", "1", "--nu", "16",
                               "--radius", "7"});
    CHECK(overflow.code != 0);
    CHECK(contains(overflow.err, "minimal admissible nu = 20"));
}

TEST_CASE("file output lands at the requested path")
{
    const std::string path = temp_path(".csv");
    const auto result = run({"--output", path, "heis", "dN", "--n", "1", "--N", "5"});
    CHECK(result.code == 0);
    CHECK(result.out.empty());
    CHECK(contains(result.err, path)); // "wrote <path>" notice
    std::ifstream written(path);
    std::stringstream content;
    content << written.rdbuf();
    std::remove(path.c_str());
    CHECK(contains(content.str(), "5,6/5,4"));
}

} // TEST_SUITE
