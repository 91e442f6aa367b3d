#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Path of the CLI binary, injected by the build.
#ifndef GRASSMANN_CLI_PATH
#error "GRASSMANN_CLI_PATH must point at the grassmann binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the binary through the shell with redirected streams. `env` is a
// space-separated VAR=value prefix.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env = "") {
    static int counter = 0;
    const std::string base =
        "/tmp/grassmann_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::string in_path = base + ".in";
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    {
        std::ofstream in(in_path, std::ios::binary);
        in << stdin_text;
    }
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += std::string("'") + GRASSMANN_CLI_PATH + "' " + args + " < " + in_path + " > " +
           out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::size_t separator_lines(const std::string& s) {
    std::istringstream ss(s);
    std::string line;
    std::size_t count = 0;
    while (std::getline(ss, line))
        if (line == "-") ++count;
    return count;
}

std::size_t total_lines(const std::string& s) {
    std::size_t count = 0;
    for (char c : s)
        if (c == '\n') ++count;
    return count;
}

}  // namespace

TEST_CASE("count") {
    auto r = run_cli("count --q 2 --n 4 --d 2");
    CHECK(r.code == 0);
    CHECK(r.out == "35\n");
    CHECK(r.err.empty());

    for (const char* m : {"gaussian", "pivot", "poly"}) {
        r = run_cli(std::string("count --q 3 --n 5 --d 2 --method ") + m);
        CHECK(r.code == 0);
        CHECK(r.out == "1210\n");
    }

    // caret and plain spellings of the same order
    CHECK(run_cli("count --q 3^2 --n 8 --d 4").out == "2113887057661126\n");
    CHECK(run_cli("count --q 9 --n 8 --d 4").out == "2113887057661126\n");

    r = run_cli("count --q 6 --n 4 --d 2");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err == "error: 6 is not a prime power\n");

    CHECK(run_cli("count --q 2 --n 3 --d 4").code == 1);
    CHECK(run_cli("count --q 2 --n 4 --d 2 --method fast").code == 1);

    // the parallel reduction is a distinct code path; pin it to gaussian
    const auto big = run_cli("count --q 2 --n 16 --d 8 --method gaussian");
    r = run_cli("count --q 2 --n 16 --d 8 --parallel");
    CHECK(r.code == 0);
    CHECK(r.out == big.out);
}

TEST_CASE("poly") {
    auto r = run_cli("poly --n 4 --d 2");
    CHECK(r.code == 0);
    CHECK(r.out == "n=4 d=2 deg=4\n1 1 2 1 1\n");

    r = run_cli("poly --n 4 --d 2 --format json");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"n\":4,\"d\":2,\"coeffs\":[\"1\",\"1\",\"2\",\"1\",\"1\"]}\n");

    CHECK(run_cli("poly --n 3 --d 0").out == "n=3 d=0 deg=0\n1\n");
    CHECK(run_cli("poly --n 2 --d 3").code == 1);
    CHECK(run_cli("poly --n 4 --d 2 --format yaml").code == 1);
}

TEST_CASE("enumerate golden output") {
    auto r = run_cli("enumerate --q 2 --n 2 --d 1");
    CHECK(r.code == 0);
    CHECK(r.out == "1 0\n-\n1 1\n-\n0 1\n");
    CHECK(r.err.empty());

    // byte-for-byte reproducible
    CHECK(run_cli("enumerate --q 2 --n 2 --d 1").out == r.out);
    // and the parallel renderer emits the same stream
    CHECK(run_cli("enumerate --q 2 --n 2 --d 1 --parallel").out == r.out);

    r = run_cli("enumerate --q 2 --n 6 --d 3");
    CHECK(r.code == 0);
    CHECK(separator_lines(r.out) == 1394);  // 1395 records
    CHECK(run_cli("enumerate --q 2 --n 6 --d 3 --parallel").out == r.out);

    r = run_cli("enumerate --q 4 --n 3 --d 1 --format json");
    CHECK(r.code == 0);
    CHECK(total_lines(r.out) == 21);  // one object per line, no separators
    CHECK(r.out.substr(0, r.out.find('\n')) ==
          "{\"q\":4,\"rows\":1,\"cols\":3,\"entries\":[[1,0,0]]}");

    // dimension zero: one record with no rows
    CHECK(run_cli("enumerate --q 2 --n 3 --d 0").out == "");
    CHECK(run_cli("enumerate --q 2 --n 3 --d 0 --format json").out ==
          "{\"q\":2,\"rows\":0,\"cols\":3,\"entries\":[]}\n");
}

TEST_CASE("enumerate size guard") {
    auto r = run_cli("enumerate --q 2 --n 5 --d 2 --cap 100");
    CHECK(r.code == 2);
    CHECK(r.out.empty());  // nothing written before the guard fires
    CHECK(r.err.substr(0, 7) == "error: ");

    r = run_cli("enumerate --q 2 --n 5 --d 2 --cap 100 --force");
    CHECK(r.code == 0);
    CHECK(separator_lines(r.out) == 154);

    // environment cap applies when the flag is absent, flag wins otherwise
    r = run_cli("enumerate --q 2 --n 5 --d 2", "", "GRASSMANN_ENUM_CAP=100");
    CHECK(r.code == 2);
    r = run_cli("enumerate --q 2 --n 5 --d 2 --cap 200", "", "GRASSMANN_ENUM_CAP=100");
    CHECK(r.code == 0);
    CHECK(separator_lines(r.out) == 154);
    CHECK(run_cli("enumerate --q 2 --n 5 --d 2", "", "GRASSMANN_ENUM_CAP=abc").code == 1);

    // raising the cap over the default guard ceiling
    r = run_cli("enumerate --q 2 --n 8 --d 4 --cap 300000");
    CHECK(r.code == 0);
    CHECK(separator_lines(r.out) == 200786);
}

TEST_CASE("pivots") {
    auto r = run_cli("pivots --n 4 --d 2");
    CHECK(r.code == 0);
    CHECK(r.out == "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(run_cli("pivots --n 3 --d 0").out == "\n");  // the empty sequence
    CHECK(run_cli("pivots --n 2 --d 3").code == 1);
}

TEST_CASE("canon") {
    auto r = run_cli("canon --q 2", "0 1\n1 1\n");
    CHECK(r.code == 0);
    CHECK(r.out == "1 0\n0 1\ndim 2\n");

    r = run_cli("canon --q 5", "2 4\n1 2\n");
    CHECK(r.code == 0);
    CHECK(r.out == "1 2\ndim 1\n");

    r = run_cli("canon --q 2", "0 0\n");
    CHECK(r.code == 0);
    CHECK(r.out == "dim 0\n");  // canonical matrix has no rows

    r = run_cli("canon --q 2 --format json", "0 1\n1 1\n");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"q\":2,\"rows\":2,\"cols\":2,\"entries\":[[1,0],[0,1]]}\n");

    const std::string path = "/tmp/grassmann_cli_canon_input.txt";
    {
        std::ofstream f(path);
        f << "1 1 0\n0 1 1\n";
    }
    r = run_cli("canon --q 2 --input " + path);
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 1\n0 1 1\ndim 2\n");
    std::remove(path.c_str());

    CHECK(run_cli("canon --q 2 --input /tmp/grassmann_no_such_file").code == 1);
    CHECK(run_cli("canon --q 5", "0 7\n").code == 1);   // code outside the field
    CHECK(run_cli("canon --q 2", "1 0\n1\n").code == 1);  // ragged rows
    CHECK(run_cli("canon --q 2", "").code == 1);        // empty input
}

TEST_CASE("verify") {
    auto r = run_cli("verify --q 2 --n 3 --d 1");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "pass q=2 n=3 d=1: 7 = 7 = 7 = 7 (oracle = gaussian = pivot = poly), bijection ok\n");

    r = run_cli("verify --q 2 --n 4 --d 2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "pass q=2 n=4 d=2: 35 = 35 = 35 = 35 (oracle = gaussian = pivot = poly), bijection ok\n");

    r = run_cli("verify --q 2 --n 3 --d 1 --format json");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"q\":2,\"n\":3,\"d\":1,\"oracle\":\"7\",\"gaussian\":\"7\",\"pivot\":\"7\","
                   "\"poly\":\"7\",\"bijection\":\"ok\"}\n");

    r = run_cli("verify --q 2 --n 3 --d 1", "", "GRASSMANN_ORACLE_BUDGET=4");  // 2^3 tuples > 4
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(run_cli("verify --q 2 --n 3 --d 1", "", "GRASSMANN_ORACLE_BUDGET=ten").code == 1);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("").code == 1);                       // a subcommand is required
    CHECK(run_cli("count --q 2 --n 4").code == 1);      // missing --d
    CHECK(run_cli("count --q 2 --n 4 --d 2 --bogus").code == 1);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("count --help").code == 0);
}
