#pragma once

#include <array>
#include <optional>
#include <utility>

#include "k5color/graph.hpp"

namespace k5color {

// Three disjoint connected branch sets, pairwise joined by an edge of the
// host graph, holding the three roots.
struct RootedK3Witness {
    std::set<int> x_set;
    std::set<int> y_set;
    std::set<int> z_set;
    std::array<int, 3> roots{};
};

namespace detail {

inline void check_roots(const Graph& g, int x, int y, int z) {
    if (x == y || y == z || x == z)
        throw std::invalid_argument("roots must be distinct");
    if (!g.has_vertex(x) || !g.has_vertex(y) || !g.has_vertex(z))
        throw std::invalid_argument("roots must be vertices of the graph");
}

} // namespace detail

// v is good when at least two of the roots other than v share a component
// of G - v; bad otherwise.
inline bool is_good(const Graph& g, int v, std::array<int, 3> roots) {
    detail::check_roots(g, roots[0], roots[1], roots[2]);
    if (!g.has_vertex(v)) throw std::invalid_argument("is_good: no such vertex");
    for (const auto& comp : components_excluding(g, {v})) {
        int hits = 0;
        for (int r : roots)
            if (r != v && std::binary_search(comp.begin(), comp.end(), r)) ++hits;
        if (hits >= 2) return true;
    }
    return false;
}

// Decision form: a K3-minor rooted at x,y,z exists iff every vertex is good.
inline bool has_rooted_k3(const Graph& g, int x, int y, int z) {
    detail::check_roots(g, x, y, z);
    for (int v : g.vertices())
        if (!is_good(g, v, {x, y, z})) return false;
    return true;
}

// An edge vw at v whose contraction keeps the graph 2-connected. Incident
// edges are tried in ascending neighbor order; one always works in a
// 2-connected graph. On K3 the contraction yields K2, which counts: the
// rooted-minor extractor only asks for contractions above its |V|=3 base
// case, so the degenerate answer is never fed back into the recursion.
inline std::pair<int, int> find_contractible_edge(const Graph& g, int v) {
    if (!is_two_connected(g))
        throw std::invalid_argument("find_contractible_edge: graph is not 2-connected");
    for (int w : g.neighbors(v)) {
        Graph c = contract_edge(g, v, w);
        if (c.order() == 2 || is_two_connected(c)) return {v, w};
    }
    throw std::logic_error("find_contractible_edge: no edge at v survives contraction");
}

inline bool validate_rooted_k3_witness(const Graph& g, const RootedK3Witness& w) {
    detail::check_roots(g, w.roots[0], w.roots[1], w.roots[2]);
    const std::set<int>* sets[3] = {&w.x_set, &w.y_set, &w.z_set};
    for (int i = 0; i < 3; ++i) {
        if (sets[i]->empty() || !sets[i]->count(w.roots[i])) return false;
        for (int v : *sets[i])
            if (!g.has_vertex(v)) return false;
        if (!is_connected(g.induced(*sets[i]))) return false;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int u : *sets[i])
                if (sets[j]->count(u)) return false;
            bool adjacent = false;
            for (int u : *sets[i]) {
                if (std::any_of(sets[j]->begin(), sets[j]->end(),
                                [&](int t) { return g.has_edge(u, t); })) {
                    adjacent = true;
                    break;
                }
            }
            if (!adjacent) return false;
        }
    }
    return true;
}

namespace detail {

// Construction for the all-good case, mirroring the inductive argument:
// base K3; otherwise restrict to the component holding the roots; at a cut
// vertex contract toward a component free of the two co-component roots;
// in the 2-connected case contract a contractible edge at a non-root
// vertex. Contractions are undone by handing both pre-images to the branch
// set that received the merged vertex.
inline RootedK3Witness extract_all_good(const Graph& g, std::array<int, 3> roots);

inline RootedK3Witness lift_through_contraction(RootedK3Witness w, int v, int merged) {
    for (auto* s : {&w.x_set, &w.y_set, &w.z_set}) {
        if (s->count(merged)) {
            s->insert(v);
            return w;
        }
    }
    return w; // merged vertex unused by the witness
}

inline RootedK3Witness contract_and_extract(const Graph& g, std::array<int, 3> roots,
                                            int v, int w) {
    int merged = std::min(v, w);
    int gone = std::max(v, w);
    Graph contracted = contract_edge(g, v, w);
    std::array<int, 3> new_roots = roots;
    for (int& r : new_roots)
        if (r == v || r == w) r = merged;
    RootedK3Witness inner = extract_all_good(contracted, new_roots);
    inner = lift_through_contraction(std::move(inner), gone, merged);
    inner.roots = roots;
    return inner;
}

inline RootedK3Witness extract_all_good(const Graph& g, std::array<int, 3> roots) {
    for (int v : g.vertices())
        if (!is_good(g, v, roots))
            throw std::logic_error("extract_all_good: bad vertex in an all-good graph");

    auto [x, y, z] = roots;
    if (g.order() == 3) {
        if (g.edge_count() != 3)
            throw std::logic_error("extract_all_good: 3-vertex all-good graph is not a triangle");
        return RootedK3Witness{{x}, {y}, {z}, roots};
    }

    auto comps = components(g);
    if (comps.size() > 1) {
        for (const auto& comp : comps) {
            if (std::binary_search(comp.begin(), comp.end(), x)) {
                std::set<int> keep(comp.begin(), comp.end());
                if (!keep.count(y) || !keep.count(z))
                    throw std::logic_error("extract_all_good: roots split across components");
                return extract_all_good(g.induced(keep), roots);
            }
        }
    }

    std::set<int> cuts = articulation_vertices(g);
    if (!cuts.empty()) {
        int v = *cuts.begin();
        auto parts = components_excluding(g, {v});
        // First root pair sharing a component of G - v; v's goodness
        // guarantees one exists.
        std::array<std::pair<int, int>, 3> pairs{{{x, y}, {x, z}, {y, z}}};
        int r1 = -1, r2 = -1;
        for (auto [a, b] : pairs) {
            if (a == v || b == v) continue;
            for (const auto& comp : parts) {
                if (std::binary_search(comp.begin(), comp.end(), a) &&
                    std::binary_search(comp.begin(), comp.end(), b)) {
                    r1 = a;
                    r2 = b;
                    break;
                }
            }
            if (r1 >= 0) break;
        }
        if (r1 < 0) throw std::logic_error("extract_all_good: good cut vertex without a co-component root pair");

        for (const auto& comp : parts) {
            if (std::binary_search(comp.begin(), comp.end(), r1) ||
                std::binary_search(comp.begin(), comp.end(), r2))
                continue;
            for (int w : g.neighbors(v)) {
                if (std::binary_search(comp.begin(), comp.end(), w))
                    return contract_and_extract(g, roots, v, w);
            }
        }
        throw std::logic_error("extract_all_good: cut vertex has no component avoiding the root pair");
    }

    // 2-connected and |V| >= 4: contract at the smallest non-root vertex.
    for (int v : g.vertices()) {
        if (v == x || v == y || v == z) continue;
        auto [cv, cw] = find_contractible_edge(g, v);
        return contract_and_extract(g, roots, cv, cw);
    }
    throw std::logic_error("extract_all_good: no non-root vertex in a graph of order >= 4");
}

} // namespace detail

// Returns a witness exactly when has_rooted_k3 holds.
inline std::optional<RootedK3Witness> extract_rooted_k3(const Graph& g, int x, int y, int z) {
    detail::check_roots(g, x, y, z);
    if (!has_rooted_k3(g, x, y, z)) return std::nullopt;
    return detail::extract_all_good(g, {x, y, z});
}

} // namespace k5color
