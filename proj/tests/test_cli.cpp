#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// SPAST_CLI_PATH and SPAST_DATA_DIR are injected by the build.

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;  // stdout and stderr combined
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "spast_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path scratch_file(const std::string& name) { return scratch_dir() / name; }

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path capture = scratch_file("capture_" + std::to_string(counter++) + ".txt");
    std::string cmd =
        std::string(SPAST_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(capture);
    return r;
}

std::string data(const std::string& name) {
    return (fs::path(SPAST_DATA_DIR) / name).string();
}

}  // namespace

TEST_CASE("solve prints the matching and exits 0") {
    RunResult r = run("solve " + data("fig1.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "3 2\n4 3\n5 1\n");

    r = run("solve --check --alternate " + data("fig1.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "3 2\n4 3\n5 1\n");
}

TEST_CASE("solve reports a solutionless instance with exit 2") {
    RunResult r = run("solve " + data("allties.txt"));
    CHECK(r.code == 2);
    CHECK(r.out == "NO_SUPER_STABLE\n");
}

TEST_CASE("solve --trace narrates the run as comments") {
    RunResult r = run("solve --trace " + data("fig1.txt"));
    CHECK(r.code == 0);
    CHECK(r.out.find("# APPLY 1 1\n") == 0);
    CHECK(r.out.find("# DELETE 1 1 project-oversubscribed\n") != std::string::npos);
    CHECK(r.out.find("# DELETE 4 2 post-while\n") != std::string::npos);
    CHECK(r.out.find("# PHASE 2\n") != std::string::npos);
    // the matching still closes the output
    CHECK(r.out.rfind("3 2\n4 3\n5 1\n") == r.out.size() - 12);
}

TEST_CASE("bad inputs exit 1 with an error line") {
    RunResult r = run("solve " + scratch_file("missing.txt").string());
    CHECK(r.code == 1);
    CHECK(r.out.find("error:") == 0);

    fs::path bad = scratch_file("bad.txt");
    spit(bad, "1 1 1\n1\n1\n1\n(1\n1\n");
    r = run("solve " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("error: line") == 0);
}

TEST_CASE("check verifies matchings under both notions") {
    fs::path good = scratch_file("good_matching.txt");
    spit(good, "3 2\n4 3\n5 1\n");
    RunResult r = run("check " + data("fig1.txt") + " " + good.string());
    CHECK(r.code == 0);
    CHECK(r.out == "SUPER_STABLE\n");

    r = run("check --notion weak " + data("fig1.txt") + " " + good.string());
    CHECK(r.code == 0);
    CHECK(r.out == "WEAKLY_STABLE\n");

    fs::path blocked = scratch_file("blocked_matching.txt");
    spit(blocked, "1 1\n");
    r = run("check " + data("fig1.txt") + " " + blocked.string());
    CHECK(r.code == 2);
    CHECK(r.out.find("BLOCKING ") == 0);

    fs::path overfull = scratch_file("overfull_matching.txt");
    spit(overfull, "1 1\n2 1\n");
    r = run("check " + data("fig1.txt") + " " + overfull.string());
    CHECK(r.code == 2);
    CHECK(r.out.find("NOT_A_MATCHING") == 0);
}

TEST_CASE("oracle lists matchings under a budget") {
    RunResult r = run("oracle " + data("fig1.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "# 1 matchings\n3 2\n4 3\n5 1\n\n");

    r = run("oracle " + data("allties.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "# 0 matchings\n");

    r = run("oracle --notion weak " + data("allties.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "# 2 matchings\n1 1\n2 2\n\n1 2\n2 1\n\n");

    r = run("oracle --budget 2 " + data("fig1.txt"));
    CHECK(r.code == 1);
    CHECK(r.out.find("error:") == 0);
}

TEST_CASE("ipcheck reports agreement across the three routes") {
    RunResult r = run("ipcheck " + data("fig1.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "ip_feasible 1\noracle_super_stable 1\nsolver_found 1\nAGREE\n");

    r = run("ipcheck " + data("allties.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "ip_feasible 0\noracle_super_stable 0\nsolver_found 0\nAGREE\n");
}

TEST_CASE("lpexport writes an LP file") {
    fs::path lp = scratch_file("fig1.lp");
    RunResult r = run("lpexport -o " + lp.string() + " " + data("fig1.txt"));
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::string text = slurp(lp);
    CHECK(text.find("Maximize") == 0);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("Binary") != std::string::npos);
    CHECK(text.find("x_1_1") != std::string::npos);
}

TEST_CASE("clone emits the hospitals/residents re-encoding") {
    RunResult r = run("clone " + data("fig2.txt"));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "4 3 3\n"
          "1 1 1\n"
          "1 1 1\n"
          "1 2 3\n"
          "1\n"
          "(1 2)\n"
          "2 3\n"
          "(1 2)\n"
          "4 1 2\n"
          "4 (2 3)\n"
          "3\n");
}

TEST_CASE("generate emits a solvable, reproducible instance") {
    std::string args = "generate --n1 12 --pref-len 3 --tds 0.2 --tdl 0.2 --seed 5";
    RunResult first = run(args);
    CHECK(first.code == 0);
    CHECK(run(args).out == first.out);

    fs::path inst = scratch_file("generated.txt");
    spit(inst, first.out);
    RunResult solved = run("solve " + inst.string());
    CHECK((solved.code == 0 || solved.code == 2));

    RunResult bad = run("generate --n1 4 --pref-len 99");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("error:") == 0);
}

TEST_CASE("experiment writes csv rows for the grid") {
    RunResult r = run("experiment --exp 1 --n1 10 --trials 0");
    CHECK(r.code == 0);
    CHECK(r.out == "experiment,n1,pref_len,t_ds,t_dl,trials,seed,proportion,mean_solve_s\n");

    r = run("experiment --exp 2 --n1 6 --pref 2 --trials 4 --seed 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("mean_solve_s\n2,6,2,0.005,0.005,4,3,") != std::string::npos);
}

TEST_CASE("bench writes one csv row per size") {
    fs::path csv = scratch_file("bench.csv");
    RunResult r = run("bench --n1 8 --trials 2 --seed 1 -o " + csv.string());
    CHECK(r.code == 0);
    std::string text = slurp(csv);
    CHECK(text.find("n1,trials,seed,mean_solve_s\n8,2,1,") == 0);
}

TEST_CASE("a subcommand is required") {
    CHECK(run("").code != 0);
}
