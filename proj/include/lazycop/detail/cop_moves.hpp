#ifndef LAZYCOP_DETAIL_COP_MOVES_HPP
#define LAZYCOP_DETAIL_COP_MOVES_HPP

#include <algorithm>
#include <bit>

#include "lazycop/graph.hpp"

namespace lazycop::detail {

// Calls fn(sorted positions, k) once per legal cop move from `cops` (sorted,
// k entries): choose at most max_movers cops, each moves along one edge,
// the rest stay. The all-stay move is always included. The general path may
// repeat a destination multiset when identical cops make symmetric choices;
// callers must tolerate duplicates. Moves are their own inverses, so this
// also enumerates the predecessor placements of `cops`.
template <typename Fn>
void for_each_cop_move(const Graph& g, const int* cops, int k, int max_movers, Fn&& fn) {
    fn(cops, k);  // pass
    if (max_movers == 1) {
        int tmp[16];
        for (int i = 0; i < k; ++i) {
            if (i > 0 && cops[i] == cops[i - 1]) continue;
            for (std::uint64_t m = g.row(cops[i]); m; m &= m - 1) {
                const int w = std::countr_zero(m);
                for (int t = 0; t < k; ++t) tmp[t] = cops[t];
                tmp[i] = w;
                std::sort(tmp, tmp + k);
                fn(tmp, k);
            }
        }
        return;
    }
    // general m-of-k: recursive mover-budget enumeration
    int current[16];
    auto rec = [&](auto&& self, int i, int budget, bool moved_any) -> void {
        if (i == k) {
            if (!moved_any) return;  // pass already emitted
            int tmp[16];
            for (int t = 0; t < k; ++t) tmp[t] = current[t];
            std::sort(tmp, tmp + k);
            fn(tmp, k);
            return;
        }
        current[i] = cops[i];
        self(self, i + 1, budget, moved_any);
        if (budget > 0)
            for (std::uint64_t m = g.row(cops[i]); m; m &= m - 1) {
                current[i] = std::countr_zero(m);
                self(self, i + 1, budget - 1, true);
            }
    };
    rec(rec, 0, max_movers, false);
}

}  // namespace lazycop::detail

#endif
