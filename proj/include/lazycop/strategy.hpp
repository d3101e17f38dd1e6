#ifndef LAZYCOP_STRATEGY_HPP
#define LAZYCOP_STRATEGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lazycop/game.hpp"

namespace lazycop {

/// Positional policies read off a solved WinTable. One entry per state:
/// cop-win cop-turn states hold the rank-decreasing cop move, robber-win
/// robber-turn states hold a safe robber move, everything else is kNone.
/// Ties break to the smallest successor state index.
struct StrategyTable {
    static constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<std::uint32_t> next_state;

    std::uint32_t at(std::uint32_t idx) const { return next_state[idx]; }
};

StrategyTable extract_strategies(const Graph& g, Rules rules, const WinTable& wt);

/// Local soundness of the cop policy over the whole state space: every
/// cop-win cop-turn state steps to rank-1-less, and every cop-win robber-turn
/// state has all robber options cop-win with rank at most its own. By
/// induction this bounds every play from a cop-win state by its rank.
bool verify_cop_strategy(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                         std::string* why = nullptr);

/// Every robber-win robber-turn state has a policy move to a robber-win state.
bool verify_robber_strategy(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                            std::string* why = nullptr);

/// Plays the cop policy against a maximally delaying robber from a cop-turn
/// start; returns cop turns until capture, or -1 if the robber escapes.
int simulate_capture(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                     std::vector<int> cops, int robber);

/// Plays the robber policy against seeded-random cop play from a robber-safe
/// cop-turn start; returns the number of rounds survived (capped).
int simulate_evasion(const Graph& g, Rules rules, const WinTable& wt, const StrategyTable& st,
                     std::vector<int> cops, int robber, int max_rounds, std::uint64_t seed);

}  // namespace lazycop

#endif
