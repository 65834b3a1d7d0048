#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "k5color/io.hpp"

// Exercises the installed binary end to end; the exit codes checked here
// are the tool's contract (0 ok, 1 parse, 2 invalid, 3 contradiction,
// 4 oracle scale).

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string data(const std::string& name) { return std::string(K5COLOR_TEST_DATA) + "/" + name; }

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_path = "/tmp/k5color_cli_out_" + std::to_string(getpid()) + "_" +
                           std::to_string(counter++) + ".txt";
    std::string cmd = std::string(K5COLOR_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

} // namespace

TEST_CASE("color: success, output and verification round-trip") {
    auto r = run_cli("color " + data("triangle.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0:1\n1:2\n2:3\n");

    auto rj = run_cli("color --json " + data("triangle.json"));
    CHECK(rj.exit_code == 0);
    k5color::Coloring col = k5color::parse_coloring(rj.out);
    CHECK(col == k5color::Coloring{{0, 1}, {1, 2}, {2, 3}});

    std::string col_path = "/tmp/k5color_cli_coloring_" + std::to_string(getpid()) + ".json";
    std::ofstream(col_path) << rj.out;
    auto rv = run_cli("verify " + data("triangle.json") + " " + col_path);
    CHECK(rv.exit_code == 0);
    CHECK(rv.out == "valid\n");
    std::remove(col_path.c_str());
}

TEST_CASE("color: exit codes for the failure modes") {
    CHECK(run_cli("color " + data("bad_clique.json")).exit_code == 2);
    CHECK(run_cli("color " + data("fake_boundary.json")).exit_code == 3);
    // deep validation catches the same lie up front, as an invalid instance
    CHECK(run_cli("color --deep-validate " + data("fake_boundary.json")).exit_code == 2);
    CHECK(run_cli("color " + data("garbage.json")).exit_code == 1);
    CHECK(run_cli("color /no/such/file.json").exit_code == 1);
}

TEST_CASE("color: deep validation accepts a genuine boundary") {
    auto r = run_cli("color --deep-validate " + data("triangle.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0:1\n1:2\n2:3\n");
}

TEST_CASE("minor: answers and the size guard") {
    auto yes = run_cli("minor " + data("k5.json"));
    CHECK(yes.exit_code == 0);
    CHECK(yes.out == "k5-minor: yes\n");

    auto no = run_cli("minor " + data("triangle.json"));
    CHECK(no.exit_code == 0);
    CHECK(no.out == "k5-minor: no\n");

    CHECK(run_cli("minor " + data("path15.json")).exit_code == 4);
    CHECK(run_cli("minor --oracle-guard 15 " + data("path15.json")).exit_code == 0);
}

TEST_CASE("verify: improper colourings fail") {
    auto good = run_cli("verify " + data("c4.json") + " " + data("c4_good_coloring.json"));
    CHECK(good.exit_code == 0);
    auto bad = run_cli("verify " + data("c4.json") + " " + data("c4_bad_coloring.json"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.out == "invalid\n");
}

TEST_CASE("rooted-k3: decision, witness, bad roots") {
    auto yes = run_cli("rooted-k3 " + data("c4.json") + " --roots 0,1,2");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("rooted-k3: yes") == 0);

    auto no = run_cli("rooted-k3 " + data("path3.json") + " --roots 0,1,2");
    CHECK(no.exit_code == 0);
    CHECK(no.out.find("rooted-k3: no") == 0);

    auto wit = run_cli("rooted-k3 " + data("c4.json") + " --roots 0,1,2 --witness");
    CHECK(wit.exit_code == 0);
    CHECK(wit.out.find("X:") != std::string::npos);
    CHECK(wit.out.find("Y:") != std::string::npos);
    CHECK(wit.out.find("Z:") != std::string::npos);

    CHECK(run_cli("rooted-k3 " + data("c4.json") + " --roots 0,0,1").exit_code == 2);
    CHECK(run_cli("rooted-k3 " + data("c4.json") + " --roots 0,1,9").exit_code == 2);
}

TEST_CASE("gen: deterministic and well-formed") {
    auto a1 = run_cli("gen apollonian --n 8 --seed 5");
    auto a2 = run_cli("gen apollonian --n 8 --seed 5");
    CHECK(a1.exit_code == 0);
    CHECK(a1.out == a2.out);
    k5color::Instance inst = k5color::parse_instance(a1.out);
    CHECK(inst.graph.order() == 8);
    CHECK(inst.graph.edge_count() == 18);

    auto i1 = run_cli("gen instance --n 9 --seed 3 --mode vertex-neighborhood --palette 8");
    auto i2 = run_cli("gen instance --n 9 --seed 3 --mode vertex-neighborhood --palette 8");
    CHECK(i1.exit_code == 0);
    CHECK(i1.out == i2.out);
    k5color::Instance gen_inst = k5color::parse_instance(i1.out);
    CHECK(k5color::check_instance(gen_inst).ok());

    auto e1 = run_cli("gen instance --n 7 --seed 4 --mode empty");
    CHECK(e1.exit_code == 0);
    k5color::Instance empty_inst = k5color::parse_instance(e1.out);
    CHECK(empty_inst.a.empty());
    CHECK(empty_inst.b.empty());
    CHECK(k5color::check_instance(empty_inst).ok());

    // a generated instance feeds straight back into color
    std::string path = "/tmp/k5color_cli_geninst_" + std::to_string(getpid()) + ".json";
    std::ofstream(path) << i1.out;
    CHECK(run_cli("color " + path).exit_code == 0);
    std::remove(path.c_str());
}
