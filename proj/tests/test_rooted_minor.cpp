#include <catch2/catch_amalgamated.hpp>

#include "k5color/rooted_minor.hpp"
#include "k5color/selftest.hpp"

using namespace k5color;

TEST_CASE("is_good") {
    SECTION("middle of a path is bad for its ends") {
        Graph g = graph_from_edges({{0, 1}, {1, 2}}); // x=0, y=1, z=2
        CHECK_FALSE(is_good(g, 1, {0, 1, 2}));
        CHECK(is_good(g, 0, {0, 1, 2}));
    }
    SECTION("every vertex of a triangle is good") {
        Graph g = graph_from_edges({{0, 1}, {1, 2}, {0, 2}});
        for (int v : g.vertices()) CHECK(is_good(g, v, {0, 1, 2}));
    }
    SECTION("star center is bad for three leaves") {
        Graph g = graph_from_edges({{9, 0}, {9, 1}, {9, 2}});
        CHECK_FALSE(is_good(g, 9, {0, 1, 2}));
    }
    SECTION("invalid roots are rejected") {
        Graph g = selftest::complete(3);
        CHECK_THROWS_AS(is_good(g, 0, {0, 0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(is_good(g, 0, {0, 1, 5}), std::invalid_argument);
    }
}

TEST_CASE("has_rooted_k3") {
    CHECK(has_rooted_k3(selftest::complete(3), 0, 1, 2));
    CHECK_FALSE(has_rooted_k3(graph_from_edges({{0, 1}, {1, 2}}), 0, 1, 2));
    // any three vertices of a 4-cycle work: it is 2-connected
    Graph c4 = selftest::cycle(4);
    CHECK(has_rooted_k3(c4, 0, 1, 2));
    CHECK(has_rooted_k3(c4, 0, 1, 3));
    CHECK(has_rooted_k3(c4, 1, 2, 3));
}

TEST_CASE("extract_rooted_k3") {
    SECTION("triangle gives singletons") {
        auto wit = extract_rooted_k3(selftest::complete(3), 0, 1, 2);
        REQUIRE(wit.has_value());
        CHECK(wit->x_set == std::set<int>{0});
        CHECK(wit->y_set == std::set<int>{1});
        CHECK(wit->z_set == std::set<int>{2});
    }
    SECTION("4-cycle routes the spare vertex into a branch set") {
        Graph c4 = selftest::cycle(4);
        auto wit = extract_rooted_k3(c4, 0, 1, 2);
        REQUIRE(wit.has_value());
        CHECK(validate_rooted_k3_witness(c4, *wit));
        // deterministic: vertex 3 is contracted into its smallest neighbor 0
        CHECK(wit->x_set == std::set<int>{0, 3});
        CHECK(wit->y_set == std::set<int>{1});
        CHECK(wit->z_set == std::set<int>{2});
    }
    SECTION("path has no witness") {
        CHECK_FALSE(extract_rooted_k3(graph_from_edges({{0, 1}, {1, 2}}), 0, 1, 2).has_value());
    }
}

TEST_CASE("find_contractible_edge") {
    SECTION("triangle accepts the K2 contraction") {
        auto [v, w] = find_contractible_edge(selftest::complete(3), 0);
        CHECK(v == 0);
        CHECK(w == 1);
    }
    SECTION("4-cycle contracts to a triangle") {
        Graph c4 = selftest::cycle(4);
        auto [v, w] = find_contractible_edge(c4, 0);
        CHECK(is_two_connected(contract_edge(c4, v, w)));
    }
    SECTION("diamond at a degree-2 vertex") {
        Graph diamond = graph_from_edges({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
        auto [v, w] = find_contractible_edge(diamond, 0);
        CHECK(v == 0);
        CHECK(is_two_connected(contract_edge(diamond, v, w)));
    }
    SECTION("rejects graphs that are not 2-connected") {
        CHECK_THROWS_AS(find_contractible_edge(graph_from_edges({{0, 1}, {1, 2}}), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("decision matches enumeration on every small graph") {
    long disagreements = 0;
    long bad_witnesses = 0;
    for (int n = 3; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
            Graph g = selftest::graph_from_mask(n, mask);
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    for (int z = y + 1; z < n; ++z) {
                        bool fast = has_rooted_k3(g, x, y, z);
                        if (fast != selftest::brute_rooted_k3(g, x, y, z)) ++disagreements;
                        auto wit = extract_rooted_k3(g, x, y, z);
                        if (wit.has_value() != fast) ++disagreements;
                        if (wit && !validate_rooted_k3_witness(g, *wit)) ++bad_witnesses;
                    }
        }
    }
    CHECK(disagreements == 0);
    CHECK(bad_witnesses == 0);
}

TEST_CASE("decision and extraction agree on random graphs up to 9 vertices") {
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        int n = 4 + static_cast<int>(rng.below(6));
        Graph g = selftest::random_graph(n, 30 + static_cast<int>(rng.below(45)), rng);
        bool fast = has_rooted_k3(g, 0, 1, 2);
        auto wit = extract_rooted_k3(g, 0, 1, 2);
        REQUIRE(wit.has_value() == fast);
        if (wit) CHECK(validate_rooted_k3_witness(g, *wit));
    }
}

TEST_CASE("a contractible edge exists at every vertex of a 2-connected graph") {
    Rng rng(6);
    int done = 0;
    while (done < 120) {
        Graph g = selftest::random_graph(3 + static_cast<int>(rng.below(5)), 55, rng);
        if (!is_two_connected(g)) continue;
        ++done;
        for (int v : g.vertices()) {
            auto [a, b] = find_contractible_edge(g, v);
            CHECK(a == v);
            Graph c = contract_edge(g, a, b);
            CHECK((c.order() == 2 || is_two_connected(c)));
        }
    }
}
