// Exercises the installed command-line surface: exit codes, report content,
// and byte-identical JSON on repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct run_result {
    int exit_code;
    std::string out;
};

run_result run(const std::string& args) {
    std::string out_file = "cli_test_out.txt";
    std::string cmd = std::string(DEGCOND_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(out_file.c_str());
    return {code, ss.str()};
}

}  // namespace

TEST_CASE("check with a declared condition exits 0") {
    auto r = run("check --seq 4^5 --cond ham");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "declared\n");
}

TEST_CASE("check with a failing condition exits 1 and names the clause") {
    auto r = run("check --seq 2^5 --cond ham");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "fails (1.1) at i=2\n");
}

TEST_CASE("check bound output") {
    auto r = run("\"check\" --seq \"1^5 4^2 6^2 7^3\" --bound murphy-alpha");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5\n");
    auto cw = run("check --seq \"1^5 4^2 6^2 7^3\" --bound caro-wei");
    CHECK(cw.exit_code == 0);
    CHECK(cw.out == "997/280 (ceiling 4)\n");
}

TEST_CASE("usage and validation errors exit 2") {
    CHECK(run("check --seq 4^5").exit_code == 2);
    CHECK(run("check --seq 1.5 --cond ham").exit_code == 2);
    CHECK(run("check --seq 4^5 --cond nope").exit_code == 2);
    CHECK(run("check --seq \"1,3,3,3\" --cond ham").exit_code == 2);
    CHECK(run("forcibly --seq 3^9 --prop hamiltonian").exit_code == 2);           // scale guard
    CHECK(run("forcibly --seq 3^9 --prop hamiltonian --max-n 8").exit_code == 2);  // still over
    CHECK(run("sinks --prop hamiltonian --n 8").exit_code == 2);
}

TEST_CASE("forcibly exits by verdict and prints a counterexample") {
    CHECK(run("forcibly --seq 2^5 --prop hamiltonian").exit_code == 0);
    auto r = run("forcibly --seq \"1,2,2,3\" --prop hamiltonian");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("counterexample") != std::string::npos);
    CHECK(r.out.find("\"edges\"") != std::string::npos);
}

TEST_CASE("verify weak optimality") {
    CHECK(run("verify --cond ham --n 5..7").exit_code == 0);
    CHECK(run("verify --cond alpha-le --k 1 --n 5").exit_code == 0);
    CHECK(run("verify --cond tough --t 3/2 --n 7").exit_code == 0);
}

TEST_CASE("sinks command") {
    auto r = run("sinks --prop hamiltonian --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count=1") != std::string::npos);
    CHECK(r.out.find("1^1 2^2 3^1") != std::string::npos);
}

TEST_CASE("bm-sweep containment verdicts") {
    CHECK(run("bm-sweep --from tough:1 --to ham --n 3..6").exit_code == 0);
    auto r = run("bm-sweep --from bindhi:1 --to ham --n 6..8");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAILS") != std::string::npos);
}

TEST_CASE("registry listing") {
    auto r = run("registry");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ham") != std::string::npos);
    CHECK(r.out.find("Chvatal") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
    auto a = run("--json check --seq \"3,4,4,5,5,5\" --cond tough --t 5/3");
    auto b = run("--json check --seq \"3,4,4,5,5,5\" --cond tough --t 5/3");
    CHECK(a.exit_code == 1);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"failing_clause\"") != std::string::npos);

    auto s1 = run("--json sinks --prop hamiltonian --n 4");
    auto s2 = run("--json sinks --prop hamiltonian --n 4");
    CHECK(s1.out == s2.out);
}
