#include <catch2/catch_amalgamated.hpp>

#include "k5color/boundary.hpp"
#include "k5color/selftest.hpp"

using namespace k5color;

TEST_CASE("boundary_after_delete") {
    CHECK(boundary_after_delete({0}, 0, {1, 2}) == std::set<int>{1, 2});
    CHECK(boundary_after_delete({0, 1}, 0, {1, 3}) == std::set<int>{1, 3});
    CHECK(boundary_after_delete({0, 1, 2}, 1, {0, 2}) == std::set<int>{0, 2});
    CHECK_THROWS_AS(boundary_after_delete({1, 2}, 0, {}), std::invalid_argument);
}

TEST_CASE("boundary_after_delete never keeps v and always keeps the neighborhood") {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        Graph g = selftest::random_graph(3 + static_cast<int>(rng.below(6)), 50, rng);
        auto verts = g.vertices();
        int v = verts[rng.below(verts.size())];
        std::set<int> b{v};
        for (int u : verts)
            if (rng.below(2)) b.insert(u);
        auto out = boundary_after_delete(b, v, g.neighbors(v));
        CHECK_FALSE(out.count(v));
        for (int u : g.neighbors(v)) CHECK(out.count(u));
    }
}

TEST_CASE("check_instance accepts the pinned triangle") {
    Instance inst;
    inst.graph = selftest::complete(3);
    inst.a = {0};
    inst.b = {0};
    inst.lists = {{0, {1}}, {1, {1, 2, 3, 4, 5}}, {2, {1, 2, 3, 4, 5}}};
    CHECK(check_instance(inst).ok());
}

TEST_CASE("check_instance flags each violated invariant") {
    SECTION("A must be a clique") {
        Instance inst;
        inst.graph = graph_from_edges({{0, 1}, {1, 2}}); // 0 and 2 non-adjacent
        inst.a = {0, 2};
        inst.b = {0, 2};
        inst.lists = {{0, {1}}, {1, {1, 2, 3, 4, 5}}, {2, {2}}};
        auto report = check_instance(inst);
        REQUIRE_FALSE(report.ok());
        CHECK(report.to_string().find("clique") != std::string::npos);
    }
    SECTION("boundary lists need three colours") {
        Instance inst;
        inst.graph = selftest::complete(3);
        inst.b = {0};
        inst.lists = {{0, {1, 2}}, {1, {1, 2, 3, 4, 5}}, {2, {1, 2, 3, 4, 5}}};
        auto report = check_instance(inst);
        REQUIRE_FALSE(report.ok());
        CHECK(report.to_string().find("at least 3") != std::string::npos);
    }
    SECTION("pinned vertices need distinct colours") {
        Instance inst;
        inst.graph = selftest::complete(3);
        inst.a = {0, 1};
        inst.b = {0, 1};
        inst.lists = {{0, {1}}, {1, {1}}, {2, {1, 2, 3, 4, 5}}};
        auto report = check_instance(inst);
        REQUIRE_FALSE(report.ok());
        CHECK(report.to_string().find("same colour") != std::string::npos);
    }
    SECTION("every vertex needs a list") {
        Instance inst;
        inst.graph = selftest::complete(3);
        inst.lists = {{0, {1, 2, 3, 4, 5}}, {1, {1, 2, 3, 4, 5}}};
        CHECK_FALSE(check_instance(inst).ok());
    }
    SECTION("A outside B") {
        Instance inst;
        inst.graph = selftest::complete(3);
        inst.a = {0};
        inst.b = {1};
        inst.lists = {{0, {1}}, {1, {1, 2, 3}}, {2, {1, 2, 3, 4, 5}}};
        CHECK_FALSE(check_instance(inst).ok());
    }
}

TEST_CASE("deep validation consults the minor oracle") {
    SECTION("a genuine boundary passes") {
        Instance inst;
        inst.graph = selftest::cycle(4);
        inst.b = {0, 1, 2, 3};
        for (int v = 0; v < 4; ++v) inst.lists[v] = {1, 2, 3};
        CHECK(check_instance(inst, true).ok());
    }
    SECTION("a fake boundary is flagged") {
        Instance inst;
        inst.graph = selftest::complete(4);
        inst.b = {0, 1, 2, 3};
        for (int v = 0; v < 4; ++v) inst.lists[v] = {1, 2, 3};
        auto report = check_instance(inst, true);
        REQUIRE_FALSE(report.ok());
        CHECK(report.to_string().find("boundary") != std::string::npos);
    }
    SECTION("a graph with a K5-minor is flagged") {
        Instance inst;
        inst.graph = selftest::complete(5);
        for (int v = 0; v < 5; ++v) inst.lists[v] = {1, 2, 3, 4, 5};
        auto report = check_instance(inst, true);
        REQUIRE_FALSE(report.ok());
        CHECK(report.to_string().find("K5-minor") != std::string::npos);
    }
}
