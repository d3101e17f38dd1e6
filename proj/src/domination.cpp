#include "lazycop/domination.hpp"

#include <bit>

namespace lazycop {

namespace {

struct DomSearch {
    const Graph& g;
    std::uint64_t all;
    int best_size;
    std::uint64_t best_set = 0;

    explicit DomSearch(const Graph& graph) : g(graph), all(VertexSet::all(graph.n()).mask) {
        // greedy cover as the initial upper bound
        std::uint64_t covered = 0, chosen = 0;
        while (covered != all) {
            int pick = -1, gain = -1;
            for (int v = 0; v < g.n(); ++v) {
                const int got = std::popcount(g.closed_neighbors(v).mask & ~covered);
                if (got > gain) {
                    gain = got;
                    pick = v;
                }
            }
            chosen |= std::uint64_t{1} << pick;
            covered |= g.closed_neighbors(pick).mask;
        }
        best_size = std::popcount(chosen);
        best_set = chosen;
    }

    void rec(std::uint64_t covered, std::uint64_t chosen, int size) {
        if (covered == all) {
            if (size < best_size) {
                best_size = size;
                best_set = chosen;
            }
            return;
        }
        int max_gain = 0;
        for (int v = 0; v < g.n(); ++v)
            max_gain = std::max(max_gain, std::popcount(g.closed_neighbors(v).mask & ~covered));
        const int uncovered = std::popcount(all & ~covered);
        if (size + (uncovered + max_gain - 1) / max_gain >= best_size) return;

        // branch on an uncovered vertex with the fewest dominating candidates
        int u = -1, candidates = kMaxVertices + 1;
        for (std::uint64_t m = all & ~covered; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int c = g.closed_neighbors(v).count();
            if (c < candidates) {
                candidates = c;
                u = v;
            }
        }
        for (int v : g.closed_neighbors(u))
            rec(covered | g.closed_neighbors(v).mask, chosen | (std::uint64_t{1} << v), size + 1);
    }
};

}  // namespace

VertexSet min_dominating_set(const Graph& g) {
    DomSearch s(g);
    s.rec(0, 0, 0);
    return VertexSet(s.best_set);
}

int domination_number(const Graph& g) {
    return min_dominating_set(g).count();
}

std::pair<bool, std::vector<int>> is_dismantlable(const Graph& g) {
    std::uint64_t alive = VertexSet::all(g.n()).mask;
    std::vector<int> order;
    bool removed = true;
    while (removed && std::popcount(alive) > 1) {
        removed = false;
        for (std::uint64_t m = alive; m && !removed; m &= m - 1) {
            const int u = std::countr_zero(m);
            const std::uint64_t nu = g.closed_neighbors(u).mask & alive;
            for (std::uint64_t m2 = alive & ~(std::uint64_t{1} << u); m2; m2 &= m2 - 1) {
                const int v = std::countr_zero(m2);
                if ((nu & ~(g.closed_neighbors(v).mask & alive)) == 0) {
                    alive &= ~(std::uint64_t{1} << u);
                    order.push_back(u);
                    removed = true;
                    break;
                }
            }
        }
    }
    if (std::popcount(alive) == 1) return {true, order};
    return {false, {}};
}

}  // namespace lazycop
