#ifndef LAZYCOP_GAME_HPP
#define LAZYCOP_GAME_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lazycop/graph.hpp"
#include "lazycop/multiset_index.hpp"

namespace lazycop {

/// Movement rule: k cops of which at most max_movers may move per cop turn.
/// max_movers = 1 is the lazy game, max_movers = k the standard game.
struct Rules {
    int cops = 1;
    int max_movers = 1;

    static Rules lazy(int k) { return {k, 1}; }
    static Rules standard(int k) { return {k, k}; }

    void validate() const {
        if (cops < 1 || cops > 16) throw Error("rules: cop count out of range 1..16");
        if (max_movers < 1 || max_movers > cops) throw Error("rules: max_movers out of range 1..k");
    }
    friend bool operator==(Rules a, Rules b) {
        return a.cops == b.cops && a.max_movers == b.max_movers;
    }
};

enum class Turn : int { CopMove = 0, RobberMove = 1 };

struct GameState {
    std::vector<int> cops;  // sorted ascending; stacking allowed
    int robber = 0;
    Turn turn = Turn::CopMove;
};

struct BudgetError : Error {
    std::uint64_t required = 0;
    std::uint64_t budget = 0;
    BudgetError(std::uint64_t req, std::uint64_t bud)
        : Error("state budget exceeded: need " + std::to_string(req) + " states, budget " +
                std::to_string(bud) + " (raise --budget or LAZYCOP_BUDGET)"),
          required(req),
          budget(bud) {}
};

inline constexpr std::uint64_t kDefaultStateBudget = std::uint64_t{1} << 25;

/// Default budget, overridable through the LAZYCOP_BUDGET environment variable.
std::uint64_t default_state_budget();

/// Exact solution of the pursuit game on a connected graph: for every state,
/// whether the cops can force capture, and in how many cop turns.
class WinTable {
public:
    static constexpr std::uint32_t kInfinity = 0xffffffffu;

    WinTable(const Graph& g, Rules rules, std::uint64_t state_budget);

    const Graph& graph() const { return g_; }
    Rules rules() const { return rules_; }
    int n() const { return g_.n(); }
    std::uint64_t placement_count() const { return placements_; }
    std::uint64_t state_count() const { return 2 * placements_ * static_cast<std::uint64_t>(n()); }

    std::uint32_t index(std::uint64_t placement, int robber, Turn t) const {
        return static_cast<std::uint32_t>(
            ((placement * static_cast<std::uint64_t>(n()) + static_cast<std::uint64_t>(robber)) << 1) +
            static_cast<std::uint64_t>(t));
    }
    std::uint32_t index(std::span<const int> cops_sorted, int robber, Turn t) const {
        return index(multiset_rank(cops_sorted, n()), robber, t);
    }
    std::uint32_t index(const GameState& s) const { return index(s.cops, s.robber, s.turn); }

    bool copwin(std::uint32_t idx) const { return rank_[idx] != kInfinity; }
    std::uint32_t rank(std::uint32_t idx) const { return rank_[idx]; }

    void unrank_placement(std::uint64_t placement, int* out) const {
        multiset_unrank(placement, rules_.cops, n(), out);
    }

private:
    friend WinTable solve_attractor(const Graph&, Rules, std::uint64_t);
    Graph g_;
    Rules rules_;
    std::uint64_t placements_ = 0;
    std::vector<std::uint32_t> rank_;
};

/// Backward-induction attractor: least fixpoint of the cop-win predicate with
/// worst-case capture ranks (cops minimize, robber maximizes).
WinTable solve_attractor(const Graph& g, Rules rules, std::uint64_t state_budget = default_state_budget());

/// True iff some initial cop placement wins against every robber response;
/// also returns the lexicographically least winning placement.
std::pair<bool, std::optional<std::vector<int>>> cops_can_win(const WinTable& wt);
std::pair<bool, std::optional<std::vector<int>>> cops_can_win(
    const Graph& g, Rules rules, std::uint64_t state_budget = default_state_budget());

int cop_number(const Graph& g, std::uint64_t state_budget = default_state_budget());
int lazy_cop_number(const Graph& g, std::uint64_t state_budget = default_state_budget());

/// Cop turns needed under optimal play from the best winning placement
/// against a worst-case robber. Throws if the cops cannot win.
int capture_time(const WinTable& wt);
int capture_time(const Graph& g, Rules rules, std::uint64_t state_budget = default_state_budget());

/// Legal cop moves from a sorted placement (at most rules.max_movers cops each
/// move along one edge; passing allowed). May repeat a successor multiset.
void for_each_cop_move(const Graph& g, std::span<const int> cops, int max_movers,
                       const std::function<void(std::span<const int>)>& fn);

}  // namespace lazycop

#endif
