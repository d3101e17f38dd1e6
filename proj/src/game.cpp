#include "lazycop/game.hpp"

#include <cstdlib>

#include "lazycop/detail/cop_moves.hpp"
#include "lazycop/domination.hpp"

namespace lazycop {

std::uint64_t default_state_budget() {
    if (const char* env = std::getenv("LAZYCOP_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultStateBudget;
}

namespace {

// Upper bound on per-cop-turn branching, for the transition budget check.
unsigned __int128 branching_bound(int k, int m, int max_degree) {
    unsigned __int128 total = 0;
    unsigned __int128 deg_pow = 1;
    for (int t = 0; t <= m; ++t) {
        total += static_cast<unsigned __int128>(binomial(k, t)) * deg_pow;
        deg_pow *= static_cast<unsigned>(std::max(max_degree, 1));
    }
    return total;
}

}  // namespace

WinTable::WinTable(const Graph& g, Rules rules, std::uint64_t state_budget)
    : g_(g), rules_(rules) {
    rules_.validate();
    const int n = g_.n();
    placements_ = multiset_count(n, rules_.cops);
    const unsigned __int128 states =
        static_cast<unsigned __int128>(placements_) * static_cast<unsigned>(n) * 2u;
    if (states > state_budget)
        throw BudgetError(static_cast<std::uint64_t>(states), state_budget);
    if (states > 0xfffffffeull)  // state indices are 32-bit
        throw BudgetError(static_cast<std::uint64_t>(states), 0xfffffffeull);
    const int max_deg = degree_stats(g_).max_degree;
    const unsigned __int128 transitions =
        states * branching_bound(rules_.cops, rules_.max_movers, max_deg);
    if (transitions > static_cast<unsigned __int128>(state_budget) * 64)
        throw BudgetError(static_cast<std::uint64_t>(transitions / 64), state_budget);
    rank_.assign(static_cast<std::size_t>(states), kInfinity);
}

WinTable solve_attractor(const Graph& g, Rules rules, std::uint64_t state_budget) {
    if (!is_connected(g)) throw Error("solve_attractor requires a connected graph");
    WinTable wt(g, rules, state_budget);
    const int n = g.n();
    const int k = rules.cops;
    const std::uint64_t placements = wt.placement_count();
    auto& rank = wt.rank_;

    // Escape countdown per live robber-turn state: robber options not yet
    // known to be cop-win. 0 means untouched; first touch seeds 1 + deg.
    std::vector<std::uint8_t> escape(static_cast<std::size_t>(placements) *
                                     static_cast<std::size_t>(n));

    std::vector<std::uint32_t> cur, nxt;
    int cops[16];

    // Base: every state with the robber on a cop is captured, rank 0.
    for (std::uint64_t p = 0; p < placements; ++p) {
        wt.unrank_placement(p, cops);
        for (int i = 0; i < k; ++i) {
            if (i > 0 && cops[i] == cops[i - 1]) continue;
            for (int t = 0; t < 2; ++t) {
                const std::uint32_t idx = wt.index(p, cops[i], static_cast<Turn>(t));
                rank[idx] = 0;
                cur.push_back(idx);
            }
        }
    }

    std::uint32_t level = 0;
    while (!cur.empty()) {
        for (std::size_t i = 0; i < cur.size(); ++i) {  // grows while robber states saturate
            const std::uint32_t idx = cur[i];
            const int turn = static_cast<int>(idx & 1);
            const std::uint64_t pr = idx >> 1;
            const int robber = static_cast<int>(pr % static_cast<std::uint64_t>(n));
            const std::uint64_t p = pr / static_cast<std::uint64_t>(n);
            wt.unrank_placement(p, cops);

            if (turn == static_cast<int>(Turn::RobberMove)) {
                // Predecessors: cop-turn states one legal cop move away.
                detail::for_each_cop_move(g, cops, k, rules.max_movers, [&](const int* c, int kk) {
                    const std::uint64_t p0 = multiset_rank(std::span<const int>(c, static_cast<std::size_t>(kk)), n);
                    const std::uint32_t pidx = wt.index(p0, robber, Turn::CopMove);
                    if (rank[pidx] == WinTable::kInfinity) {
                        rank[pidx] = level + 1;
                        nxt.push_back(pidx);
                    }
                });
            } else {
                // Predecessors: robber-turn states from which the robber could
                // stay or step here. Capture states carry rank 0 already, so
                // the infinity test also guards the escape counters.
                const std::uint64_t options = g.row(robber) | (std::uint64_t{1} << robber);
                for (std::uint64_t m = options; m; m &= m - 1) {
                    const int r0 = std::countr_zero(m);
                    const std::uint32_t pidx = wt.index(p, r0, Turn::RobberMove);
                    if (rank[pidx] != WinTable::kInfinity) continue;
                    std::uint8_t& cnt = escape[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) +
                                               static_cast<std::size_t>(r0)];
                    if (cnt == 0) cnt = static_cast<std::uint8_t>(1 + g.degree(r0));
                    if (--cnt == 0) {
                        rank[pidx] = level;
                        cur.push_back(pidx);
                    }
                }
            }
        }
        cur = std::move(nxt);
        nxt.clear();
        ++level;
    }
    return wt;
}

std::pair<bool, std::optional<std::vector<int>>> cops_can_win(const WinTable& wt) {
    const int n = wt.n();
    int cops[16];
    std::optional<std::vector<int>> best;
    for (std::uint64_t p = 0; p < wt.placement_count(); ++p) {
        bool all = true;
        for (int r = 0; r < n && all; ++r)
            all = wt.copwin(wt.index(p, r, Turn::CopMove));
        if (!all) continue;
        wt.unrank_placement(p, cops);
        std::vector<int> v(cops, cops + wt.rules().cops);
        if (!best || v < *best) best = std::move(v);
    }
    return {best.has_value(), best};
}

std::pair<bool, std::optional<std::vector<int>>> cops_can_win(const Graph& g, Rules rules,
                                                              std::uint64_t state_budget) {
    return cops_can_win(solve_attractor(g, rules, state_budget));
}

namespace {
int ascend(const Graph& g, bool lazy, std::uint64_t budget) {
    const int gamma = domination_number(g);
    for (int k = 1; k <= gamma; ++k) {
        const Rules rules = lazy ? Rules::lazy(k) : Rules::standard(k);
        if (cops_can_win(g, rules, budget).first) return k;
    }
    throw Error("internal: domination-number placement failed to win");
}
}  // namespace

int cop_number(const Graph& g, std::uint64_t state_budget) {
    return ascend(g, false, state_budget);
}

int lazy_cop_number(const Graph& g, std::uint64_t state_budget) {
    return ascend(g, true, state_budget);
}

int capture_time(const WinTable& wt) {
    const int n = wt.n();
    std::uint32_t best = WinTable::kInfinity;
    for (std::uint64_t p = 0; p < wt.placement_count(); ++p) {
        std::uint32_t worst = 0;
        for (int r = 0; r < n; ++r) {
            const std::uint32_t rk = wt.rank(wt.index(p, r, Turn::CopMove));
            if (rk == WinTable::kInfinity) {
                worst = WinTable::kInfinity;
                break;
            }
            worst = std::max(worst, rk);
        }
        best = std::min(best, worst);
    }
    if (best == WinTable::kInfinity) throw Error("capture_time: cops cannot win");
    return static_cast<int>(best);
}

int capture_time(const Graph& g, Rules rules, std::uint64_t state_budget) {
    return capture_time(solve_attractor(g, rules, state_budget));
}

void for_each_cop_move(const Graph& g, std::span<const int> cops, int max_movers,
                       const std::function<void(std::span<const int>)>& fn) {
    detail::for_each_cop_move(g, cops.data(), static_cast<int>(cops.size()), max_movers,
                              [&](const int* c, int k) { fn(std::span<const int>(c, static_cast<std::size_t>(k))); });
}

}  // namespace lazycop
