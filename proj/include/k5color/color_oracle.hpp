#pragma once

#include <optional>

#include "k5color/boundary.hpp"
#include "k5color/graph.hpp"

namespace k5color {

inline constexpr int kDefaultColorOracleGuard = 12;

// Exhaustive list-colouring by plain backtracking, kept deliberately
// simple: vertices are processed smallest-list-first (ties by id), colours
// in ascending order, and the only check is against already-coloured
// neighbours. This is the ground truth the main algorithm is tested
// against, so it trades speed for being obviously correct.
inline std::optional<Coloring> brute_force_list_color(const Graph& g, const ListAssignment& lists,
                                                      int size_guard = kDefaultColorOracleGuard) {
    if (static_cast<int>(g.order()) > size_guard)
        throw OracleScaleError("oracle scale exceeded: " + std::to_string(g.order()) +
                               " vertices (guard " + std::to_string(size_guard) + ")");
    std::vector<int> order = g.vertices();
    for (int v : order)
        if (!lists.count(v)) return std::nullopt; // a vertex with no list has no colour
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return lists.at(a).size() < lists.at(b).size();
    });

    Coloring coloring;
    auto assign = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size()) return true;
        int v = order[i];
        for (int c : lists.at(v)) {
            bool clash = false;
            for (int w : g.neighbors(v)) {
                auto it = coloring.find(w);
                if (it != coloring.end() && it->second == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            coloring[v] = c;
            if (self(self, i + 1)) return true;
            coloring.erase(v);
        }
        return false;
    };
    if (assign(assign, 0)) return coloring;
    return std::nullopt;
}

} // namespace k5color
