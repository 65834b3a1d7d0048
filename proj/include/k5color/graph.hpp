#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace k5color {

// Simple undirected graph over stable, non-negative integer vertex ids.
// Ids are never reindexed: deletions keep the remaining ids, and an edge
// contraction keeps the smaller of the two ids. That way witnesses and
// colorings computed on derived graphs apply to the parent graph directly.
//
// Graphs are plain values; the algorithm layers never mutate a shared one.
class Graph {
public:
    Graph() = default;

    void add_vertex(int v) {
        if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
        adj_.try_emplace(v);
    }

    // Inserts missing endpoints. Self-loops are rejected; re-adding an
    // existing edge is a no-op (the graph is simple).
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        add_vertex(u);
        add_vertex(v);
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    void remove_vertex(int v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::invalid_argument("remove_vertex: no such vertex");
        for (int w : it->second) adj_[w].erase(v);
        adj_.erase(it);
    }

    bool has_vertex(int v) const { return adj_.count(v) != 0; }

    bool has_edge(int u, int v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) != 0;
    }

    std::size_t order() const { return adj_.size(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& [v, nbrs] : adj_) twice += nbrs.size();
        return twice / 2;
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    const std::set<int>& neighbors(int v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::invalid_argument("neighbors: no such vertex");
        return it->second;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(adj_.size());
        for (const auto& [v, nbrs] : adj_) out.push_back(v);
        return out;
    }

    std::set<int> vertex_set() const {
        std::set<int> out;
        for (const auto& [v, nbrs] : adj_) out.insert(v);
        return out;
    }

    // Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [v, nbrs] : adj_)
            for (int w : nbrs)
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    int max_vertex_id() const {
        return adj_.empty() ? -1 : adj_.rbegin()->first;
    }

    Graph induced(const std::set<int>& keep) const {
        Graph g;
        for (int v : keep) {
            if (!has_vertex(v)) throw std::invalid_argument("induced: vertex not in graph");
            g.add_vertex(v);
        }
        for (int v : keep)
            for (int w : neighbors(v))
                if (w > v && keep.count(w)) g.add_edge(v, w);
        return g;
    }

    Graph without_vertex(int v) const {
        Graph g = *this;
        g.remove_vertex(v);
        return g;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::map<int, std::set<int>> adj_;
};

inline Graph graph_from_edges(std::initializer_list<std::pair<int, int>> edges,
                              std::initializer_list<int> isolated = {}) {
    Graph g;
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (int v : isolated) g.add_vertex(v);
    return g;
}

// G/uv: merge u and v into the vertex min(u,v). Loops vanish and parallel
// edges collapse, so the result is simple again.
inline Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: uv is not an edge");
    int keep = std::min(u, v);
    int gone = std::max(u, v);
    std::set<int> gained = g.neighbors(gone);
    Graph out = g.without_vertex(gone);
    for (int w : gained)
        if (w != keep) out.add_edge(keep, w);
    return out;
}

// Connected components as sorted vertex lists, ordered by smallest member.
// `skip` vertices are treated as deleted.
inline std::vector<std::vector<int>> components_excluding(const Graph& g,
                                                          const std::set<int>& skip) {
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (int start : g.vertices()) {
        if (skip.count(start) || seen.count(start)) continue;
        std::vector<int> comp;
        std::vector<int> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (skip.count(w) || seen.count(w)) continue;
                seen.insert(w);
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
    return components_excluding(g, {});
}

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

// A vertex is an articulation vertex iff deleting it splits its own
// component. Checked directly against that definition; the graphs this
// project handles are small enough that the quadratic cost is irrelevant.
inline std::set<int> articulation_vertices(const Graph& g) {
    std::set<int> cuts;
    for (const auto& comp : components(g)) {
        if (comp.size() < 3) continue;
        std::set<int> comp_set(comp.begin(), comp.end());
        Graph sub = g.induced(comp_set);
        for (int v : comp) {
            if (components_excluding(sub, {v}).size() > 1) cuts.insert(v);
        }
    }
    return cuts;
}

inline bool is_two_connected(const Graph& g) {
    return g.order() >= 3 && is_connected(g) && articulation_vertices(g).empty();
}

// Two-sided cover of the vertex set; the overlap is the separator and no
// edge joins the two private parts.
struct Separation {
    std::set<int> left;
    std::set<int> right;

    std::set<int> separator() const {
        std::set<int> s;
        std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                              std::inserter(s, s.begin()));
        return s;
    }
    int order() const { return static_cast<int>(separator().size()); }
};

inline bool validate_separation(const Graph& g, const Separation& sep) {
    std::set<int> all = sep.left;
    all.insert(sep.right.begin(), sep.right.end());
    if (all != g.vertex_set()) return false;
    std::set<int> s = sep.separator();
    bool left_private = false, right_private = false;
    for (int v : sep.left) left_private |= !sep.right.count(v);
    for (int v : sep.right) right_private |= !sep.left.count(v);
    if (!left_private || !right_private) return false;
    for (auto [u, v] : g.edges()) {
        bool u_left_only = sep.left.count(u) && !sep.right.count(u);
        bool v_right_only = sep.right.count(v) && !sep.left.count(v);
        bool u_right_only = sep.right.count(u) && !sep.left.count(u);
        bool v_left_only = sep.left.count(v) && !sep.right.count(v);
        if ((u_left_only && v_right_only) || (u_right_only && v_left_only)) return false;
    }
    return true;
}

struct SmallCut {
    std::set<int> cut;
    Separation separation;
};

namespace detail {

// Builds the separation for cut C: the first component (by smallest id)
// holding a vertex of S \ C goes left, everything else right.
inline std::optional<SmallCut> realize_cut(const Graph& g, const std::set<int>& cut,
                                           const std::set<int>& s) {
    auto comps = components_excluding(g, cut);
    if (comps.size() < 2) return std::nullopt;
    int with_s = 0;
    std::size_t first_s = comps.size();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool has_s = std::any_of(comps[i].begin(), comps[i].end(), [&](int v) {
            return s.count(v) && !cut.count(v);
        });
        if (has_s) {
            ++with_s;
            first_s = std::min(first_s, i);
        }
    }
    if (with_s < 2) return std::nullopt;
    SmallCut out;
    out.cut = cut;
    out.separation.left = cut;
    out.separation.right = cut;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto& side = (i == first_s) ? out.separation.left : out.separation.right;
        side.insert(comps[i].begin(), comps[i].end());
    }
    return out;
}

} // namespace detail

// Smallest vertex cut of order <= max_order (1 or 2) separating two
// vertices of S, lexicographically first among the minimum-size ones.
// When `require_member_of` is given the cut must intersect it.
inline std::optional<SmallCut> find_small_cut_separating(
    const Graph& g, const std::set<int>& s, int max_order,
    const std::optional<std::set<int>>& require_member_of = std::nullopt) {
    for (int v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("find_small_cut_separating: S not within graph");
    if (max_order < 1 || max_order > 2)
        throw std::invalid_argument("find_small_cut_separating: max_order must be 1 or 2");

    std::vector<int> verts = g.vertices();
    auto allowed = [&](const std::set<int>& cut) {
        if (!require_member_of) return true;
        return std::any_of(cut.begin(), cut.end(),
                           [&](int v) { return require_member_of->count(v) != 0; });
    };

    for (int v : verts) {
        std::set<int> cut{v};
        if (!allowed(cut)) continue;
        if (auto found = detail::realize_cut(g, cut, s)) return found;
    }
    if (max_order >= 2) {
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                std::set<int> cut{verts[i], verts[j]};
                if (!allowed(cut)) continue;
                if (auto found = detail::realize_cut(g, cut, s)) return found;
            }
        }
    }
    return std::nullopt;
}

} // namespace k5color
