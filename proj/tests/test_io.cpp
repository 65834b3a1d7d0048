#include <catch2/catch_amalgamated.hpp>

#include "k5color/generators.hpp"
#include "k5color/io.hpp"
#include "k5color/selftest.hpp"

using namespace k5color;

namespace {

bool same_instance(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.a == b.a && a.b == b.b && a.lists == b.lists;
}

} // namespace

TEST_CASE("parse a hand-written document") {
    const char* text = R"({
        "vertices": [0, 1, 2],
        "edges": [[0, 1], [1, 2], [0, 2]],
        "lists": {"0": [1], "1": [2], "2": [1, 2, 3]},
        "A": [0, 1],
        "B": [0, 1, 2]
    })";
    Instance inst = parse_instance(text);
    CHECK(inst.graph.order() == 3);
    CHECK(inst.graph.edge_count() == 3);
    CHECK(inst.a == std::set<int>{0, 1});
    CHECK(inst.b == std::set<int>{0, 1, 2});
    CHECK(inst.lists.at(2) == std::set<int>{1, 2, 3});
}

TEST_CASE("A and B default to empty") {
    Instance inst = parse_instance(R"({"vertices": [4], "edges": [], "lists": {"4": [1]}})");
    CHECK(inst.a.empty());
    CHECK(inst.b.empty());
    CHECK(inst.graph.has_vertex(4));
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(73);
    for (int t = 0; t < 25; ++t) {
        Graph g = apollonian(3 + static_cast<int>(rng.below(8)), rng.next());
        auto mode = t % 2 ? BoundaryMode::kEmpty : BoundaryMode::kVertexNeighborhood;
        Instance inst = random_instance(g, mode, 8, rng.next());
        if (t % 3 == 0 && !inst.b.empty()) {
            // also exercise a nonempty A
            int a0 = *inst.b.begin();
            inst.a = {a0};
            inst.lists[a0] = {*inst.lists[a0].begin()};
        }
        Instance back = parse_instance(serialize_instance(inst));
        CHECK(same_instance(inst, back));
        // serialization itself is stable
        CHECK(serialize_instance(inst) == serialize_instance(back));
    }
}

TEST_CASE("coloring documents round-trip") {
    Coloring col{{0, 1}, {3, 2}, {12, 7}};
    CHECK(parse_coloring(serialize_coloring(col)) == col);
}

TEST_CASE("parse errors carry positions") {
    SECTION("malformed JSON mentions the line") {
        try {
            parse_instance("{\n  \"vertices\": [0,\n}");
            FAIL("expected DocumentError");
        } catch (const DocumentError& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
    SECTION("missing members") {
        CHECK_THROWS_WITH(parse_instance(R"({"vertices": [], "edges": []})"),
                          Catch::Matchers::ContainsSubstring("lists"));
    }
    SECTION("undeclared endpoint") {
        CHECK_THROWS_WITH(
            parse_instance(R"({"vertices": [0], "edges": [[0, 1]], "lists": {}})"),
            Catch::Matchers::ContainsSubstring("edges[0]"));
    }
    SECTION("self-loop") {
        CHECK_THROWS_WITH(
            parse_instance(R"({"vertices": [0], "edges": [[0, 0]], "lists": {}})"),
            Catch::Matchers::ContainsSubstring("self-loop"));
    }
    SECTION("duplicate edge") {
        CHECK_THROWS_WITH(
            parse_instance(
                R"({"vertices": [0, 1], "edges": [[0, 1], [1, 0]], "lists": {}})"),
            Catch::Matchers::ContainsSubstring("duplicate edge"));
    }
    SECTION("negative id") {
        CHECK_THROWS_AS(parse_instance(R"({"vertices": [-1], "edges": [], "lists": {}})"),
                        DocumentError);
    }
    SECTION("non-numeric list key") {
        CHECK_THROWS_WITH(
            parse_instance(R"({"vertices": [0], "edges": [], "lists": {"a": [1]}})"),
            Catch::Matchers::ContainsSubstring("decimal vertex id"));
    }
    SECTION("bad coloring document") {
        CHECK_THROWS_AS(parse_coloring(R"({"colouring": {}})"), DocumentError);
    }
}
