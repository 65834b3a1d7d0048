#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k5color/choose.hpp"
#include "k5color/generators.hpp"
#include "k5color/io.hpp"
#include "k5color/minor_oracle.hpp"
#include "k5color/rooted_minor.hpp"
#include "k5color/selftest.hpp"

namespace {

// Exit codes are part of the tool's contract:
//   0 ok, 1 parse/usage errors, 2 invalid instance or input,
//   3 internal contradiction (the instance lied about being a boundary),
//   4 oracle size guard exceeded.
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitScale = 4;

int dispatch(const std::function<int()>& body) {
    try {
        return body();
    } catch (const k5color::DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const k5color::InvalidInstanceError& e) {
        std::cerr << "error: " << e.what();
        return kExitInvalid;
    } catch (const k5color::InternalContradictionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const k5color::OracleScaleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScale;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 70;
    }
}

void print_set(const char* label, const std::set<int>& s) {
    std::cout << label << ":";
    for (int v : s) std::cout << " " << v;
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"list colouring of K5-minor-free graphs, with verification oracles"};
    app.require_subcommand(1);

    // color
    std::string color_file;
    bool color_deep = false;
    bool color_json = false;
    int color_guard = k5color::kDefaultOracleGuard;
    auto* color_cmd = app.add_subcommand("color", "colour an instance file from its lists");
    color_cmd->add_option("file", color_file, "instance document")->required();
    color_cmd->add_flag("--deep-validate", color_deep,
                        "run the minor oracle on the input and after every edge addition");
    color_cmd->add_flag("--json", color_json, "emit the colouring as a JSON document");
    color_cmd->add_option("--oracle-guard", color_guard, "minor oracle size guard");

    // verify
    std::string verify_instance_file, verify_coloring_file;
    auto* verify_cmd = app.add_subcommand("verify", "check a colouring against an instance");
    verify_cmd->add_option("file", verify_instance_file, "instance document")->required();
    verify_cmd->add_option("coloring", verify_coloring_file, "coloring document")->required();

    // minor
    std::string minor_file;
    int minor_guard = k5color::kDefaultOracleGuard;
    auto* minor_cmd = app.add_subcommand("minor", "test a graph for a K5-minor");
    minor_cmd->add_option("file", minor_file, "instance document")->required();
    minor_cmd->add_option("--oracle-guard", minor_guard, "minor oracle size guard");

    // rooted-k3
    std::string rooted_file;
    std::vector<int> rooted_roots;
    bool rooted_witness = false;
    auto* rooted_cmd = app.add_subcommand("rooted-k3", "test for a K3-minor rooted at three vertices");
    rooted_cmd->add_option("file", rooted_file, "instance document")->required();
    rooted_cmd->add_option("--roots", rooted_roots, "the three roots, e.g. 0,2,5")
        ->required()
        ->delimiter(',');
    rooted_cmd->add_flag("--witness", rooted_witness, "print the branch sets when they exist");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate instance documents");
    gen_cmd->require_subcommand(1);
    int gen_n = 8;
    uint64_t gen_seed = 1;
    auto* gen_ap = gen_cmd->add_subcommand("apollonian", "stacked planar triangulation, lists {1..5}");
    gen_ap->add_option("--n", gen_n, "vertex count (>= 3)")->required();
    gen_ap->add_option("--seed", gen_seed, "generator seed");

    int inst_n = 8;
    uint64_t inst_seed = 1;
    int inst_palette = 8;
    std::string inst_mode = "empty";
    auto* gen_inst = gen_cmd->add_subcommand("instance", "random instance on a stacked triangulation");
    gen_inst->add_option("--n", inst_n, "vertex count of the source graph (>= 3)")->required();
    gen_inst->add_option("--seed", inst_seed, "generator seed");
    gen_inst->add_option("--palette", inst_palette, "colours are drawn from {1..palette}");
    gen_inst->add_option("--mode", inst_mode, "boundary mode")
        ->check(CLI::IsMember({"empty", "vertex-neighborhood"}));

    // selftest
    int selftest_max_n = 5;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
    selftest_cmd->add_option("--max-n", selftest_max_n,
                             "exhaustive enumerations cover graphs up to this order (3..6)")
        ->check(CLI::Range(3, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the usage error
        return code == 0 ? 0 : kExitParse;
    }

    if (color_cmd->parsed()) {
        return dispatch([&] {
            k5color::Instance inst = k5color::parse_instance_file(color_file);
            k5color::ColorOptions opt;
            opt.deep_validate = color_deep;
            opt.oracle_guard = color_guard;
            k5color::Coloring col = k5color::color(inst, opt);
            if (!k5color::verify_coloring(inst.graph, inst.lists, col))
                throw std::logic_error("produced colouring failed verification");
            if (color_json) {
                std::cout << k5color::serialize_coloring(col);
            } else {
                for (auto [v, c] : col) std::cout << v << ":" << c << "\n";
            }
            return 0;
        });
    }

    if (verify_cmd->parsed()) {
        return dispatch([&] {
            k5color::Instance inst = k5color::parse_instance_file(verify_instance_file);
            k5color::Coloring col = k5color::parse_coloring_file(verify_coloring_file);
            bool ok = k5color::verify_coloring(inst.graph, inst.lists, col);
            std::cout << (ok ? "valid" : "invalid") << "\n";
            return ok ? 0 : kExitInvalid;
        });
    }

    if (minor_cmd->parsed()) {
        return dispatch([&] {
            k5color::Instance inst = k5color::parse_instance_file(minor_file);
            bool minor = k5color::has_k5_minor(inst.graph, minor_guard);
            std::cout << "k5-minor: " << (minor ? "yes" : "no") << "\n";
            return 0;
        });
    }

    if (rooted_cmd->parsed()) {
        return dispatch([&] {
            if (rooted_roots.size() != 3) {
                std::cerr << "error: --roots needs exactly three vertices\n";
                return kExitParse;
            }
            k5color::Instance inst = k5color::parse_instance_file(rooted_file);
            int x = rooted_roots[0], y = rooted_roots[1], z = rooted_roots[2];
            bool yes = k5color::has_rooted_k3(inst.graph, x, y, z);
            std::cout << "rooted-k3: " << (yes ? "yes" : "no") << "\n";
            if (yes && rooted_witness) {
                auto wit = k5color::extract_rooted_k3(inst.graph, x, y, z);
                if (!wit || !k5color::validate_rooted_k3_witness(inst.graph, *wit))
                    throw std::logic_error("extracted witness failed validation");
                print_set("X", wit->x_set);
                print_set("Y", wit->y_set);
                print_set("Z", wit->z_set);
            }
            return 0;
        });
    }

    if (gen_ap->parsed()) {
        return dispatch([&] {
            k5color::Instance inst;
            inst.graph = k5color::apollonian(gen_n, gen_seed);
            for (int v : inst.graph.vertices()) inst.lists[v] = {1, 2, 3, 4, 5};
            std::cout << k5color::serialize_instance(inst);
            return 0;
        });
    }

    if (gen_inst->parsed()) {
        return dispatch([&] {
            k5color::Rng rng(inst_seed);
            k5color::Graph g = k5color::apollonian(inst_n, rng);
            auto mode = inst_mode == "empty" ? k5color::BoundaryMode::kEmpty
                                             : k5color::BoundaryMode::kVertexNeighborhood;
            k5color::Instance inst = k5color::random_instance(g, mode, inst_palette, rng);
            std::cout << k5color::serialize_instance(inst);
            return 0;
        });
    }

    if (selftest_cmd->parsed()) {
        return dispatch([&] {
            k5color::selftest::Options opt;
            opt.max_n = selftest_max_n;
            long failures = 0;
            for (const auto& suite : k5color::selftest::run_all(opt)) {
                std::cout << suite.name << ": " << (suite.ok() ? "pass" : "FAIL") << " ("
                          << suite.checked - suite.failed << "/" << suite.checked << " checks)";
                if (!suite.ok() && !suite.detail.empty()) std::cout << " - " << suite.detail;
                std::cout << "\n";
                failures += suite.failed;
            }
            std::cout << (failures == 0 ? "selftest: all suites passed"
                                        : "selftest: FAILURES detected")
                      << "\n";
            return failures == 0 ? 0 : kExitParse;
        });
    }

    return kExitParse;
}
