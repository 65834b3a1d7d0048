#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "k5color/boundary.hpp"
#include "k5color/choose.hpp"
#include "k5color/color_oracle.hpp"
#include "k5color/generators.hpp"
#include "k5color/graph.hpp"
#include "k5color/minor_oracle.hpp"
#include "k5color/rooted_minor.hpp"

// Reference implementations and property suites. Everything in here
// re-derives its answers by plain enumeration, independent of the search
// strategies in the main headers, so the two can be played against each
// other. The CLI `selftest` command and the test binaries both run these.
namespace k5color::selftest {

// ---------------------------------------------------------------------
// fixture graphs

inline Graph complete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) {
        g.add_vertex(i);
        for (int j = 0; j < i; ++j) g.add_edge(i, j);
    }
    return g;
}

inline Graph cycle(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// hub gets id `rim`, rim vertices 0..rim-1
inline Graph wheel(int rim) {
    Graph g = cycle(rim);
    for (int i = 0; i < rim; ++i) g.add_edge(i, rim);
    return g;
}

inline Graph petersen() {
    Graph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

// the graph encoded by one bit per vertex pair, pairs in lexicographic order
inline Graph graph_from_mask(int n, uint64_t mask) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) g.add_edge(i, j);
    return g;
}

inline Graph random_graph(int n, int edge_percent, Rng& rng) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(100) < static_cast<uint64_t>(edge_percent)) g.add_edge(i, j);
    return g;
}

// ---------------------------------------------------------------------
// reference oracles

// Rooted K3-minor by exhausting all ways to spread three connected sets
// over the vertices, with a per-graph connectivity table. Meant for small
// graphs (n <= ~12).
inline bool brute_rooted_k3(const Graph& g, int x, int y, int z) {
    std::vector<int> verts = g.vertices();
    int n = static_cast<int>(verts.size());
    if (n > 16) throw std::invalid_argument("brute_rooted_k3: graph too large");
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[verts[i]] = i;

    uint32_t full = (uint32_t{1} << n) - 1;
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[pos[u]] |= uint32_t{1} << pos[v];
        adj[pos[v]] |= uint32_t{1} << pos[u];
    }
    std::vector<uint32_t> nb(full + 1, 0);
    std::vector<char> conn(full + 1, 0);
    for (uint32_t m = 1; m <= full; ++m) {
        nb[m] = nb[m & (m - 1)] | adj[std::countr_zero(m)];
        uint32_t r = m & (~m + 1);
        for (;;) {
            uint32_t next = r | (nb[r] & m);
            if (next == r) break;
            r = next;
        }
        conn[m] = (r == m);
    }

    uint32_t bx = uint32_t{1} << pos[x];
    uint32_t by = uint32_t{1} << pos[y];
    uint32_t bz = uint32_t{1} << pos[z];
    for (uint32_t xs = 1; xs <= full; ++xs) {
        if (!(xs & bx) || !conn[xs]) continue;
        uint32_t rest1 = full & ~xs;
        for (uint32_t ys = rest1; ys; ys = (ys - 1) & rest1) {
            if (!(ys & by) || !conn[ys] || !(nb[xs] & ys)) continue;
            uint32_t rest2 = rest1 & ~ys;
            for (uint32_t zs = rest2; zs; zs = (zs - 1) & rest2) {
                if (!(zs & bz) || !conn[zs]) continue;
                if ((nb[xs] & zs) && (nb[ys] & zs)) return true;
            }
        }
    }
    return false;
}

// All qualifying cuts by direct enumeration; minimum size first, then
// lexicographically smallest.
inline std::optional<std::set<int>> brute_small_cut(
    const Graph& g, const std::set<int>& s, int max_order,
    const std::optional<std::set<int>>& require_member_of = std::nullopt) {
    std::vector<int> verts = g.vertices();
    std::vector<std::vector<int>> candidates;
    for (int v : verts) candidates.push_back({v});
    if (max_order >= 2)
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                candidates.push_back({verts[i], verts[j]});

    std::vector<std::vector<int>> hits;
    for (const auto& cand : candidates) {
        std::set<int> cut(cand.begin(), cand.end());
        if (require_member_of) {
            bool any = std::any_of(cut.begin(), cut.end(),
                                   [&](int v) { return require_member_of->count(v) != 0; });
            if (!any) continue;
        }
        int parts_with_s = 0;
        for (const auto& comp : components_excluding(g, cut)) {
            bool has = std::any_of(comp.begin(), comp.end(),
                                   [&](int v) { return s.count(v) && !cut.count(v); });
            parts_with_s += has;
        }
        if (parts_with_s >= 2) hits.push_back(cand);
    }
    if (hits.empty()) return std::nullopt;
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return std::set<int>(hits.front().begin(), hits.front().end());
}

// ---------------------------------------------------------------------
// suites

struct SuiteResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string detail;

    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    bool ok() const { return failed == 0; }
};

struct Options {
    int max_n = 5;       // exhaustive enumerations cover 3..max_n vertices
    uint64_t seed = 20240501;
};

namespace suites {

inline SuiteResult graph_operations(const Options& opt) {
    SuiteResult r{"graph-operations"};
    Rng rng(opt.seed);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(n, 50, rng);

        auto comps = components(g);
        std::set<int> seen;
        bool part_ok = true;
        for (const auto& comp : comps)
            for (int v : comp) part_ok &= seen.insert(v).second;
        part_ok &= seen == g.vertex_set();
        for (auto [u, v] : g.edges()) {
            bool same = false;
            for (const auto& comp : comps)
                same |= std::binary_search(comp.begin(), comp.end(), u) &&
                        std::binary_search(comp.begin(), comp.end(), v);
            part_ok &= same;
        }
        ++r.checked;
        if (!part_ok) ++r.failed;

        auto edges = g.edges();
        if (!edges.empty()) {
            auto [u, v] = edges[rng.below(edges.size())];
            Graph c = contract_edge(g, u, v);
            std::set<int> want = g.vertex_set();
            want.erase(std::max(u, v));
            ++r.checked;
            if (c.vertex_set() != want || c.order() != g.order() - 1) ++r.failed;
        }
    }
    return r;
}

inline SuiteResult small_cut_agreement(const Options& opt) {
    SuiteResult r{"small-cut-vs-enumeration"};
    Rng rng(opt.seed + 1);
    while (r.checked < 500) {
        int n = 3 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, 55, rng);
        if (!is_connected(g) || g.order() < 2) continue;
        std::set<int> s;
        for (int v : g.vertices())
            if (rng.below(2)) s.insert(v);
        int max_order = 1 + static_cast<int>(rng.below(2));
        std::optional<std::set<int>> require;
        if (rng.below(2)) require = s;

        auto mine = find_small_cut_separating(g, s, max_order, require);
        auto reference = brute_small_cut(g, s, max_order, require);
        ++r.checked;
        bool ok = mine.has_value() == reference.has_value();
        if (ok && mine) {
            ok = mine->cut == *reference;
            ok &= validate_separation(g, mine->separation);
            ok &= mine->separation.separator() == mine->cut;
            auto side_has_s = [&](const std::set<int>& side) {
                return std::any_of(side.begin(), side.end(), [&](int v) {
                    return s.count(v) && !mine->cut.count(v);
                });
            };
            ok &= side_has_s(mine->separation.left) && side_has_s(mine->separation.right);
        }
        if (!ok) {
            ++r.failed;
            if (r.detail.empty()) r.detail = "disagreement on a random graph";
        }
    }
    return r;
}

// One pass over every graph with 3..max_n vertices: the rooted-minor
// decision against the enumeration oracle, extraction agreement, witness
// validity, and (on connected graphs) the every-rooted-minor <=>
// 2-connected equivalence.
inline void rooted_exhaustive_pass(int max_n, SuiteResult& decision, SuiteResult& witness,
                                   SuiteResult& proposition) {
    for (int n = 3; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            bool all_triples = true;
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    for (int z = y + 1; z < n; ++z) {
                        bool fast = has_rooted_k3(g, x, y, z);
                        all_triples &= fast;
                        ++decision.checked;
                        if (fast != brute_rooted_k3(g, x, y, z)) ++decision.failed;
                        auto wit = extract_rooted_k3(g, x, y, z);
                        ++witness.checked;
                        if (wit.has_value() != fast ||
                            (wit && !validate_rooted_k3_witness(g, *wit)))
                            ++witness.failed;
                    }
            if (is_connected(g)) {
                ++proposition.checked;
                if (all_triples != is_two_connected(g)) ++proposition.failed;
            }
        }
    }
}

inline SuiteResult rooted_random(const Options& opt) {
    SuiteResult r{"rooted-minor-random"};
    Rng rng(opt.seed + 2);
    for (int t = 0; t < 1000; ++t) {
        int n = 4 + static_cast<int>(rng.below(6));
        Graph g = random_graph(n, 40 + static_cast<int>(rng.below(30)), rng);
        int x = 0, y = 1, z = 2;
        bool fast = has_rooted_k3(g, x, y, z);
        auto wit = extract_rooted_k3(g, x, y, z);
        ++r.checked;
        if (wit.has_value() != fast || (wit && !validate_rooted_k3_witness(g, *wit))) ++r.failed;
    }
    return r;
}

inline SuiteResult contractible_edges(const Options& opt) {
    SuiteResult r{"contractible-edge-totality"};
    Rng rng(opt.seed + 3);
    int graphs = 0;
    while (graphs < 500) {
        int n = 3 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, 40 + static_cast<int>(rng.below(40)), rng);
        if (!is_two_connected(g)) continue;
        ++graphs;
        for (int v : g.vertices()) {
            ++r.checked;
            try {
                auto [a, b] = find_contractible_edge(g, v);
                Graph c = contract_edge(g, a, b);
                if (!(c.order() == 2 || is_two_connected(c))) ++r.failed;
            } catch (const std::exception&) {
                ++r.failed;
            }
        }
    }
    return r;
}

inline SuiteResult minor_oracle_spots(const Options& opt) {
    SuiteResult r{"minor-oracle"};
    auto expect = [&](bool got, bool want) {
        ++r.checked;
        if (got != want) ++r.failed;
    };
    expect(has_k5_minor(complete(5)), true);
    expect(has_k5_minor(complete(4)), false);
    expect(has_k5_minor(complete(6)), true);
    expect(has_k5_minor(petersen()), true);
    expect(has_k5_minor(wheel(6)), false);

    // contracting a perfect matching of the petersen graph gives K5
    {
        Graph g = petersen();
        for (int i = 0; i < 5; ++i) g = contract_edge(g, i, 5 + i);
        bool k5 = g.order() == 5 && g.edge_count() == 10;
        expect(k5, true);
    }

    // a model extracted from a positive answer must validate
    {
        auto model = find_k5_model(petersen());
        expect(model.has_value() && validate_k5_model(petersen(), *model), true);
    }

    // apollonian networks are planar, so never have a K5-minor
    Rng rng(opt.seed + 4);
    for (int t = 0; t < 10; ++t) {
        int n = 4 + static_cast<int>(rng.below(9));
        Graph g = apollonian(n, rng.next());
        expect(has_k5_minor(g), false);
        expect(g.edge_count() == static_cast<std::size_t>(3 * n - 6), true);
    }

    // minor-freeness is inherited by deletions and contractions
    for (int t = 0; t < 60; ++t) {
        int n = 5 + static_cast<int>(rng.below(4));
        Graph g = random_graph(n, 45, rng);
        if (has_k5_minor(g)) continue;
        for (int v : g.vertices()) expect(has_k5_minor(g.without_vertex(v)), false);
        for (auto [u, v] : g.edges()) expect(has_k5_minor(contract_edge(g, u, v)), false);
    }
    return r;
}

// Deleting a boundary vertex and absorbing its neighborhood keeps the
// boundary property.
inline SuiteResult boundary_contract(const Options& opt) {
    SuiteResult r{"boundary-deletion"};
    Rng rng(opt.seed + 5);
    for (int t = 0; t < 40; ++t) {
        int n = 5 + static_cast<int>(rng.below(6));
        Graph host = apollonian(n, rng.next());
        Instance inst = random_instance(host, BoundaryMode::kVertexNeighborhood, 8, rng.next());
        if (!check_instance(inst, true).ok()) {
            ++r.checked;
            ++r.failed;
            continue;
        }
        for (int v : inst.b) {
            ++r.checked;
            std::set<int> updated = boundary_after_delete(inst.b, v, inst.graph.neighbors(v));
            if (!is_boundary(inst.graph.without_vertex(v), updated)) ++r.failed;
        }
    }
    return r;
}

inline SuiteResult coloring_runs(const Options& opt) {
    SuiteResult r{"coloring-verified"};
    Rng rng(opt.seed + 6);
    for (int t = 0; t < 120; ++t) {
        Instance inst;
        switch (t % 3) {
        case 0:
            inst = random_instance(apollonian(3 + static_cast<int>(rng.below(8)), rng.next()),
                                   BoundaryMode::kEmpty, 8, rng.next());
            break;
        case 1:
            inst = random_instance(apollonian(5 + static_cast<int>(rng.below(6)), rng.next()),
                                   BoundaryMode::kVertexNeighborhood, 8, rng.next());
            break;
        default: {
            Graph w = wheel(4 + static_cast<int>(rng.below(5)));
            Rng list_rng(rng.next());
            inst = instance_from_vertex(w, w.max_vertex_id(), 8, list_rng);
            break;
        }
        }
        ColorStats stats;
        ColorOptions copt;
        copt.stats = &stats;
        copt.validate_case6_additions = true;
        ++r.checked;
        try {
            Coloring col = color(inst, copt);
            bool ok = verify_coloring(inst.graph, inst.lists, col);
            for (int a : inst.a) ok &= col.at(a) == *inst.lists.at(a).begin();
            Coloring again = color(inst, copt);
            ok &= again == col;
            if (!ok) ++r.failed;
        } catch (const std::exception&) {
            ++r.failed;
        }
    }
    return r;
}

inline SuiteResult coloring_vs_oracle(const Options& opt) {
    SuiteResult r{"coloring-vs-backtracker"};
    Rng rng(opt.seed + 7);
    for (int t = 0; t < 60; ++t) {
        int n = 3 + static_cast<int>(rng.below(6));
        Graph g = apollonian(n, rng.next());
        Instance inst = random_instance(g, BoundaryMode::kEmpty, 7, rng.next());
        ++r.checked;
        try {
            Coloring mine = color(inst);
            auto reference = brute_force_list_color(g, inst.lists);
            bool ok = verify_coloring(g, inst.lists, mine);
            ok &= reference.has_value() && verify_coloring(g, inst.lists, *reference);
            if (!ok) ++r.failed;
        } catch (const std::exception&) {
            ++r.failed;
        }
    }
    return r;
}

} // namespace suites

inline std::vector<SuiteResult> run_all(const Options& opt) {
    std::vector<SuiteResult> out;
    out.push_back(suites::graph_operations(opt));
    out.push_back(suites::small_cut_agreement(opt));

    SuiteResult decision{"rooted-minor-vs-enumeration"};
    SuiteResult witness{"rooted-minor-extraction"};
    SuiteResult proposition{"every-rooted-minor-iff-2-connected"};
    suites::rooted_exhaustive_pass(opt.max_n, decision, witness, proposition);
    out.push_back(decision);
    out.push_back(witness);
    out.push_back(proposition);

    out.push_back(suites::rooted_random(opt));
    out.push_back(suites::contractible_edges(opt));
    out.push_back(suites::minor_oracle_spots(opt));
    out.push_back(suites::boundary_contract(opt));
    out.push_back(suites::coloring_runs(opt));
    out.push_back(suites::coloring_vs_oracle(opt));
    return out;
}

} // namespace k5color::selftest
