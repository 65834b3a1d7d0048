#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "k5color/graph.hpp"

namespace k5color {

// The minor search is exponential; inputs above the guard are refused
// loudly instead of hanging.
class OracleScaleError : public std::runtime_error {
public:
    explicit OracleScaleError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr int kDefaultOracleGuard = 14;

// Five disjoint connected vertex sets, pairwise joined by an edge.
struct BranchModel {
    std::array<std::set<int>, 5> sets;
};

inline bool validate_k5_model(const Graph& g, const BranchModel& m) {
    for (const auto& s : m.sets) {
        if (s.empty()) return false;
        for (int v : s)
            if (!g.has_vertex(v)) return false;
        if (!is_connected(g.induced(s))) return false;
    }
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            bool adjacent = false;
            for (int u : m.sets[i]) {
                if (m.sets[j].count(u)) return false;
                if (!adjacent)
                    adjacent = std::any_of(m.sets[j].begin(), m.sets[j].end(),
                                           [&](int t) { return g.has_edge(u, t); });
            }
            if (!adjacent) return false;
        }
    }
    return true;
}

namespace detail {

// Branch-set search over one component, on bitmasks. Sets are produced in
// ascending order of their smallest vertex (under a degree-descending
// vertex order, so high-degree seeds are tried first), each set must be
// adjacent to all earlier ones the moment it is completed, and set growth
// is cut off as soon as even the full reachable region cannot restore a
// missing adjacency.
class K5Search {
public:
    explicit K5Search(const Graph& g) {
        std::vector<int> verts = g.vertices();
        std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
        n_ = static_cast<int>(verts.size());
        ids_ = verts;
        adj_.assign(n_, 0);
        std::map<int, int> index;
        for (int i = 0; i < n_; ++i) index[verts[i]] = i;
        for (auto [u, v] : g.edges()) {
            adj_[index[u]] |= uint32_t{1} << index[v];
            adj_[index[v]] |= uint32_t{1} << index[u];
        }
        full_ = n_ >= 32 ? ~uint32_t{0} : (uint32_t{1} << n_) - 1;
    }

    std::optional<std::array<uint32_t, 5>> run() {
        if (n_ < 5) return std::nullopt;
        if (place(0, 0, 0)) return sets_;
        return std::nullopt;
    }

    const std::vector<int>& ids() const { return ids_; }

private:
    uint32_t nbr_mask(uint32_t set) const {
        uint32_t out = 0;
        while (set) {
            int i = std::countr_zero(set);
            set &= set - 1;
            out |= adj_[i];
        }
        return out;
    }

    uint32_t reach(uint32_t from, uint32_t within) const {
        uint32_t r = from;
        for (;;) {
            uint32_t next = r | (nbr_mask(r) & within);
            if (next == r) return r;
            r = next;
        }
    }

    bool place(int level, uint32_t used, int min_seed) {
        if (level == 5) return true;
        uint32_t avail = full_ & ~used & ~((uint32_t{1} << min_seed) - 1);
        if (std::popcount(avail) < 5 - level) return false;
        for (int j = 0; j < level; ++j)
            if (!(set_nbrs_[j] & avail)) return false;
        for (int s = min_seed; s < n_; ++s) {
            uint32_t seed_bit = uint32_t{1} << s;
            if (used & seed_bit) continue;
            uint32_t allowed = full_ & ~used & ~(seed_bit - 1);
            if (grow(level, seed_bit, 0, allowed, used, s)) return true;
        }
        return false;
    }

    bool grow(int level, uint32_t set, uint32_t excluded, uint32_t allowed,
              uint32_t used, int seed) {
        bool complete = true;
        for (int j = 0; j < level && complete; ++j)
            complete = (set_nbrs_[j] & set) != 0;
        if (complete) {
            sets_[level] = set;
            set_nbrs_[level] = nbr_mask(set);
            if (place(level + 1, used | set, seed + 1)) return true;
        }

        uint32_t pot = reach(set, allowed & ~excluded);
        for (int j = 0; j < level; ++j)
            if (!(set_nbrs_[j] & pot)) return false;

        uint32_t ext = nbr_mask(set) & allowed & ~set & ~excluded;
        while (ext) {
            uint32_t v = ext & (~ext + 1);
            ext &= ext - 1;
            if (grow(level, set | v, excluded, allowed, used, seed)) return true;
            excluded |= v;
        }
        return false;
    }

    int n_ = 0;
    uint32_t full_ = 0;
    std::vector<int> ids_;
    std::vector<uint32_t> adj_;
    std::array<uint32_t, 5> sets_{};
    std::array<uint32_t, 5> set_nbrs_{};
};

// Answer-preserving shrinking before the exponential search: isolated and
// degree-1 vertices can never serve a branch set, and a degree-2 vertex can
// be merged into a neighbour (either direction of that merge maps models of
// one graph to models of the other). Degree-3 vertices are NOT safe to
// merge: contracting one into the wrong neighbour can destroy the only
// model. `rep` maps each surviving vertex to the original vertices it
// stands for, so found models lift back.
inline void reduce_for_minor(Graph& g, std::map<int, std::set<int>>& rep) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : g.vertices()) {
            int d = g.degree(v);
            if (d <= 1) {
                g.remove_vertex(v);
                rep.erase(v);
                changed = true;
                break;
            }
            if (d == 2) {
                int u = *g.neighbors(v).begin();
                int keep = std::min(u, v);
                int gone = std::max(u, v);
                g = contract_edge(g, u, v);
                rep[keep].insert(rep[gone].begin(), rep[gone].end());
                rep.erase(gone);
                changed = true;
                break;
            }
        }
    }
}

} // namespace detail

// Searches for five disjoint connected pairwise-adjacent branch sets and
// returns them when they exist. Exhaustive up to the size guard.
inline std::optional<BranchModel> find_k5_model(const Graph& g,
                                                int size_guard = kDefaultOracleGuard) {
    if (static_cast<int>(g.order()) > size_guard || size_guard > 30)
        throw OracleScaleError("oracle scale exceeded: " + std::to_string(g.order()) +
                               " vertices (guard " + std::to_string(size_guard) + ")");

    Graph work = g;
    std::map<int, std::set<int>> rep;
    for (int v : work.vertices()) rep[v] = {v};
    detail::reduce_for_minor(work, rep);

    for (const auto& comp : components(work)) {
        if (comp.size() < 5) continue;
        std::set<int> keep(comp.begin(), comp.end());
        detail::K5Search search(work.induced(keep));
        if (auto masks = search.run()) {
            BranchModel model;
            for (int i = 0; i < 5; ++i) {
                uint32_t m = (*masks)[i];
                while (m) {
                    int bit = std::countr_zero(m);
                    m &= m - 1;
                    const auto& originals = rep.at(search.ids()[bit]);
                    model.sets[i].insert(originals.begin(), originals.end());
                }
            }
            return model;
        }
    }
    return std::nullopt;
}

inline bool has_k5_minor(const Graph& g, int size_guard = kDefaultOracleGuard) {
    return find_k5_model(g, size_guard).has_value();
}

// G plus a fresh vertex (one past the largest id) adjacent to exactly B.
inline Graph plus_vertex(const Graph& g, const std::set<int>& b) {
    for (int v : b)
        if (!g.has_vertex(v)) throw std::invalid_argument("plus_vertex: B not within graph");
    Graph out = g;
    int alpha = g.max_vertex_id() + 1;
    out.add_vertex(alpha);
    for (int v : b) out.add_edge(alpha, v);
    return out;
}

// B is a boundary of G when attaching a fresh vertex to all of B leaves
// the graph K5-minor-free.
inline bool is_boundary(const Graph& g, const std::set<int>& b,
                        int size_guard = kDefaultOracleGuard) {
    return !has_k5_minor(plus_vertex(g, b), size_guard);
}

} // namespace k5color
