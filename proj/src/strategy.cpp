#include "lazycop/strategy.hpp"

#include <algorithm>
#include <random>

#include "lazycop/detail/cop_moves.hpp"

namespace lazycop {

namespace {

bool contains(const int* cops, int k, int v) {
    for (int i = 0; i < k; ++i)
        if (cops[i] == v) return true;
    return false;
}

}  // namespace

StrategyTable extract_strategies(const Graph& g, Rules rules, const WinTable& wt) {
    const int n = g.n();
    const int k = rules.cops;
    StrategyTable st;
    st.next_state.assign(wt.state_count(), StrategyTable::kNone);
    int cops[16];
    for (std::uint64_t p = 0; p < wt.placement_count(); ++p) {
        wt.unrank_placement(p, cops);
        for (int r = 0; r < n; ++r) {
            if (contains(cops, k, r)) continue;  // capture states have no moves

            const std::uint32_t cidx = wt.index(p, r, Turn::CopMove);
            if (wt.copwin(cidx)) {
                std::uint32_t best_rank = WinTable::kInfinity, best_idx = StrategyTable::kNone;
                detail::for_each_cop_move(g, cops, k, rules.max_movers, [&](const int* c, int kk) {
                    const std::uint64_t p2 =
                        multiset_rank(std::span<const int>(c, static_cast<std::size_t>(kk)), n);
                    const std::uint32_t succ = wt.index(p2, r, Turn::RobberMove);
                    const std::uint32_t rk = wt.rank(succ);
                    if (rk < best_rank || (rk == best_rank && succ < best_idx)) {
                        best_rank = rk;
                        best_idx = succ;
                    }
                });
                st.next_state[cidx] = best_idx;
            }

            const std::uint32_t ridx = wt.index(p, r, Turn::RobberMove);
            if (!wt.copwin(ridx)) {
                std::uint32_t best_idx = StrategyTable::kNone;
                const std::uint64_t options = g.row(r) | (std::uint64_t{1} << r);
                for (std::uint64_t m = options; m; m &= m - 1) {
                    const std::uint32_t succ = wt.index(p, std::countr_zero(m), Turn::CopMove);
                    if (!wt.copwin(succ) && succ < best_idx) best_idx = succ;
                }
                st.next_state[ridx] = best_idx;
            }
        }
    }
    return st;
}

bool verify_cop_strategy(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                         std::string* why) {
    const int n = g.n();
    const int k = rules.cops;
    int cops[16];
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (std::uint64_t p = 0; p < wt.placement_count(); ++p) {
        wt.unrank_placement(p, cops);
        for (int r = 0; r < n; ++r) {
            if (contains(cops, k, r)) continue;
            const std::uint32_t cidx = wt.index(p, r, Turn::CopMove);
            if (wt.copwin(cidx)) {
                const std::uint32_t succ = st.at(cidx);
                if (succ == StrategyTable::kNone) return fail("cop-win state without a cop move");
                if (wt.rank(succ) + 1 != wt.rank(cidx))
                    return fail("cop move does not decrease rank by one");
            }
            const std::uint32_t ridx = wt.index(p, r, Turn::RobberMove);
            if (wt.copwin(ridx)) {
                const std::uint64_t options = g.row(r) | (std::uint64_t{1} << r);
                for (std::uint64_t m = options; m; m &= m - 1) {
                    const std::uint32_t succ = wt.index(p, std::countr_zero(m), Turn::CopMove);
                    if (!wt.copwin(succ)) return fail("robber escape from a cop-win state");
                    if (wt.rank(succ) > wt.rank(ridx))
                        return fail("robber option exceeds the state rank");
                }
            }
        }
    }
    return true;
}

bool verify_robber_strategy(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                            std::string* why) {
    const int n = g.n();
    const int k = rules.cops;
    int cops[16];
    for (std::uint64_t p = 0; p < wt.placement_count(); ++p) {
        wt.unrank_placement(p, cops);
        for (int r = 0; r < n; ++r) {
            if (contains(cops, k, r)) continue;
            const std::uint32_t ridx = wt.index(p, r, Turn::RobberMove);
            if (wt.copwin(ridx)) continue;
            const std::uint32_t succ = st.at(ridx);
            if (succ == StrategyTable::kNone || wt.copwin(succ)) {
                if (why) *why = "robber-win state without a safe move";
                return false;
            }
        }
    }
    return true;
}

namespace {

struct Cursor {
    const WinTable& wt;
    int n;
    std::uint64_t placement;
    int robber;

    std::uint32_t idx(Turn t) const { return wt.index(placement, robber, t); }
    void apply(std::uint32_t state_idx) {
        const std::uint64_t pr = state_idx >> 1;
        robber = static_cast<int>(pr % static_cast<std::uint64_t>(n));
        placement = pr / static_cast<std::uint64_t>(n);
    }
};

}  // namespace

int simulate_capture(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                     std::vector<int> cops, int robber) {
    const int n = g.n();
    std::sort(cops.begin(), cops.end());
    Cursor cur{wt, n, multiset_rank(cops, n), robber};
    const std::uint32_t start_rank = wt.rank(cur.idx(Turn::CopMove));
    if (start_rank == WinTable::kInfinity) return -1;

    int copbuf[16];
    int turns = 0;
    for (std::uint32_t guard = 0; guard <= start_rank + 1; ++guard) {
        wt.unrank_placement(cur.placement, copbuf);
        if (contains(copbuf, rules.cops, cur.robber)) return turns;

        const std::uint32_t move = st.at(cur.idx(Turn::CopMove));
        if (move == StrategyTable::kNone) return -1;
        cur.apply(move);
        ++turns;
        wt.unrank_placement(cur.placement, copbuf);
        if (contains(copbuf, rules.cops, cur.robber)) return turns;

        // maximally delaying robber: highest-rank option, escape if possible
        std::uint32_t best_idx = 0xffffffffu;
        std::uint32_t best_rank = 0;
        bool found = false;
        const std::uint64_t options = g.row(cur.robber) | (std::uint64_t{1} << cur.robber);
        for (std::uint64_t m = options; m; m &= m - 1) {
            const std::uint32_t succ = wt.index(cur.placement, std::countr_zero(m), Turn::CopMove);
            const std::uint32_t rk = wt.rank(succ);
            if (rk == WinTable::kInfinity) return -1;  // robber escapes: strategy unsound
            if (!found || rk > best_rank || (rk == best_rank && succ < best_idx)) {
                best_rank = rk;
                best_idx = succ;
                found = true;
            }
        }
        cur.apply(best_idx);
    }
    return -1;  // exceeded the rank bound
}

int simulate_evasion(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                     std::vector<int> cops, int robber, int max_rounds, std::uint64_t seed) {
    const int n = g.n();
    std::sort(cops.begin(), cops.end());
    std::mt19937_64 rng(seed);
    Cursor cur{wt, n, multiset_rank(cops, n), robber};
    int copbuf[16];

    for (int round = 0; round < max_rounds; ++round) {
        // cops: random legal move
        wt.unrank_placement(cur.placement, copbuf);
        std::vector<std::uint64_t> succ;
        detail::for_each_cop_move(g, copbuf, rules.cops, rules.max_movers, [&](const int* c, int kk) {
            succ.push_back(multiset_rank(std::span<const int>(c, static_cast<std::size_t>(kk)), n));
        });
        cur.placement = succ[rng() % succ.size()];
        wt.unrank_placement(cur.placement, copbuf);
        if (contains(copbuf, rules.cops, cur.robber)) return round;

        const std::uint32_t move = st.at(cur.idx(Turn::RobberMove));
        if (move == StrategyTable::kNone) return round;  // no safe move recorded
        cur.apply(move);
    }
    return max_rounds;
}

}  // namespace lazycop
