#pragma once

#include <array>
#include <cstdint>

#include "k5color/boundary.hpp"
#include "k5color/graph.hpp"

namespace k5color {

// splitmix64. Chosen because the whole sequence is pinned down by these
// few lines, so identical seeds give identical graphs and instances on any
// platform (std:: distributions would not).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, n), rejection-sampled to avoid modulo bias.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
        for (;;) {
            uint64_t r = next();
            if (r < limit) return r % n;
        }
    }

private:
    uint64_t state_;
};

// Random k-subset of {1..palette}, via partial Fisher-Yates.
inline std::set<int> random_color_list(int k, int palette, Rng& rng) {
    std::vector<int> pool(palette);
    for (int i = 0; i < palette; ++i) pool[i] = i + 1;
    std::set<int> out;
    for (int i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(palette - i));
        std::swap(pool[i], pool[j]);
        out.insert(pool[i]);
    }
    return out;
}

// Stacked triangulation: start from a triangle and repeatedly plant a new
// vertex inside a uniformly chosen current face. Planar, 3n-6 edges.
inline Graph apollonian(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("apollonian: need n >= 3");
    Graph g = graph_from_edges({{0, 1}, {1, 2}, {0, 2}});
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::size_t pick = static_cast<std::size_t>(rng.below(faces.size()));
        auto [a, b, c] = faces[pick];
        g.add_edge(v, a);
        g.add_edge(v, b);
        g.add_edge(v, c);
        faces[pick] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    return g;
}

inline Graph apollonian(int n, uint64_t seed) {
    Rng rng(seed);
    return apollonian(n, rng);
}

namespace detail {

// Lexicographically smallest k-clique (as a sorted id tuple), k <= 3.
inline std::optional<std::vector<int>> smallest_clique(const Graph& g, int k) {
    std::vector<int> verts = g.vertices();
    if (k == 1) {
        if (verts.empty()) return std::nullopt;
        return std::vector<int>{verts[0]};
    }
    if (k == 2) {
        auto edges = g.edges();
        if (edges.empty()) return std::nullopt;
        return std::vector<int>{edges[0].first, edges[0].second};
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (!g.has_edge(verts[i], verts[j])) continue;
            for (std::size_t l = j + 1; l < verts.size(); ++l)
                if (g.has_edge(verts[i], verts[l]) && g.has_edge(verts[j], verts[l]))
                    return std::vector<int>{verts[i], verts[j], verts[l]};
        }
    return std::nullopt;
}

} // namespace detail

// Glue g2 onto g1 by identifying their lexicographically smallest
// k-cliques in id order; the rest of g2 is relabelled past g1's ids.
inline Graph clique_sum(const Graph& g1, const Graph& g2, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("clique_sum: k must be 1, 2 or 3");
    auto c1 = detail::smallest_clique(g1, k);
    auto c2 = detail::smallest_clique(g2, k);
    if (!c1 || !c2) throw std::invalid_argument("clique_sum: a graph has no clique of the requested size");

    std::map<int, int> relabel;
    for (int i = 0; i < k; ++i) relabel[(*c2)[i]] = (*c1)[i];
    int next_id = g1.max_vertex_id() + 1;
    for (int v : g2.vertices())
        if (!relabel.count(v)) relabel[v] = next_id++;

    Graph out = g1;
    for (int v : g2.vertices()) out.add_vertex(relabel[v]);
    for (auto [u, v] : g2.edges()) out.add_edge(relabel[u], relabel[v]);
    return out;
}

enum class BoundaryMode { kEmpty, kVertexNeighborhood };

// Deterministic core of vertex-neighborhood mode: remove u, keep its
// neighborhood as the boundary. The removed vertex plays the role of the
// attached fresh vertex when the boundary property is checked, so B is a
// boundary of G - u whenever G itself is K5-minor-free.
inline Instance instance_from_vertex(const Graph& g, int u, int palette, Rng& rng) {
    if (palette < 5) throw std::invalid_argument("instance_from_vertex: palette must be >= 5");
    Instance inst;
    inst.b = g.neighbors(u);
    inst.graph = g.without_vertex(u);
    for (int v : inst.graph.vertices())
        inst.lists[v] = random_color_list(inst.b.count(v) ? 3 : 5, palette, rng);
    return inst;
}

inline Instance random_instance(const Graph& g, BoundaryMode mode, int palette, Rng& rng) {
    if (palette < 5) throw std::invalid_argument("random_instance: palette must be >= 5");
    if (mode == BoundaryMode::kEmpty) {
        Instance inst;
        inst.graph = g;
        for (int v : g.vertices()) inst.lists[v] = random_color_list(5, palette, rng);
        return inst;
    }
    std::vector<int> verts = g.vertices();
    if (verts.empty()) throw std::invalid_argument("random_instance: graph is empty");
    int u = verts[static_cast<std::size_t>(rng.below(verts.size()))];
    return instance_from_vertex(g, u, palette, rng);
}

inline Instance random_instance(const Graph& g, BoundaryMode mode, int palette, uint64_t seed) {
    Rng rng(seed);
    return random_instance(g, mode, palette, rng);
}

} // namespace k5color
