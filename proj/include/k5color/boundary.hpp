#pragma once

#include <map>
#include <string>
#include <vector>

#include "k5color/graph.hpp"
#include "k5color/minor_oracle.hpp"

namespace k5color {

// Per-vertex sets of allowed colours. Colours are opaque non-negative
// integers; no palette bound is assumed anywhere.
using ListAssignment = std::map<int, std::set<int>>;

// A finished assignment of one colour per vertex.
using Coloring = std::map<int, int>;

// The working state of the colouring recursion: a graph, a pinned clique A
// whose vertices carry distinct singleton lists, a boundary set B whose
// other vertices carry lists of at least 3, and lists of at least 5
// everywhere else.
struct Instance {
    Graph graph;
    std::set<int> a;
    std::set<int> b;
    ListAssignment lists;
};

// The boundary after deleting v: drop v, absorb its neighborhood.
inline std::set<int> boundary_after_delete(const std::set<int>& b, int v,
                                           const std::set<int>& neighbors) {
    if (!b.count(v)) throw std::invalid_argument("boundary_after_delete: v not in B");
    std::set<int> out = b;
    out.erase(v);
    out.insert(neighbors.begin(), neighbors.end());
    return out;
}

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }

    std::string to_string() const {
        std::string out;
        for (const auto& v : violations) {
            out += v;
            out += '\n';
        }
        return out;
    }
};

// Structural checks are cheap and always apply. `deep` additionally runs
// the minor oracle to confirm the graph is K5-minor-free and that B really
// is a boundary; that is exponential and gated by the oracle size guard.
inline ValidationReport check_instance(const Instance& inst, bool deep = false,
                                       int size_guard = kDefaultOracleGuard) {
    ValidationReport report;
    auto complain = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    const Graph& g = inst.graph;
    for (int v : inst.b)
        if (!g.has_vertex(v))
            complain("B contains vertex " + std::to_string(v) + " which is not in the graph");
    for (int v : inst.a)
        if (!inst.b.count(v))
            complain("A is not contained in B (vertex " + std::to_string(v) + ")");

    for (int u : inst.a)
        for (int v : inst.a)
            if (u < v && g.has_vertex(u) && g.has_vertex(v) && !g.has_edge(u, v))
                complain("A is not a clique (" + std::to_string(u) + " and " +
                         std::to_string(v) + " are non-adjacent)");

    for (const auto& [v, list] : inst.lists)
        if (!g.has_vertex(v))
            complain("colour list keyed on unknown vertex " + std::to_string(v));

    for (int v : g.vertices()) {
        auto it = inst.lists.find(v);
        if (it == inst.lists.end()) {
            complain("vertex " + std::to_string(v) + " has no colour list");
            continue;
        }
        std::size_t size = it->second.size();
        if (inst.a.count(v)) {
            if (size != 1)
                complain("vertex " + std::to_string(v) + " in A must have exactly 1 colour, has " +
                         std::to_string(size));
        } else if (inst.b.count(v)) {
            if (size < 3)
                complain("vertex " + std::to_string(v) + " in B\\A must have at least 3 colours, has " +
                         std::to_string(size));
        } else if (size < 5) {
            complain("vertex " + std::to_string(v) + " outside B must have at least 5 colours, has " +
                     std::to_string(size));
        }
    }

    for (int u : inst.a) {
        for (int v : inst.a) {
            if (u >= v) continue;
            auto iu = inst.lists.find(u);
            auto iv = inst.lists.find(v);
            if (iu != inst.lists.end() && iv != inst.lists.end() &&
                iu->second.size() == 1 && iu->second == iv->second)
                complain("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " in A have the same colour list");
        }
    }

    if (deep && report.ok()) {
        if (has_k5_minor(g, size_guard))
            complain("graph has a K5-minor");
        else if (!is_boundary(g, inst.b, size_guard))
            complain("B is not a boundary: attaching a vertex to all of B creates a K5-minor");
    }
    return report;
}

} // namespace k5color
