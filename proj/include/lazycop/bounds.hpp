#ifndef LAZYCOP_BOUNDS_HPP
#define LAZYCOP_BOUNDS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lazycop/game.hpp"

namespace lazycop {

enum class BoundKind {
    PendantReduced,
    SandwichExact,
    DeltaImpliesLazyLE2,
    DeltaImpliesLazyLE3,
    NoFilter,
};

struct BoundVerdict {
    BoundKind kind = BoundKind::NoFilter;
    int value = 0;
    std::string provenance;
};

/// Cascade of degree-1 deletions (each preserves the lazy cop number) until
/// minimum degree 2 or a single vertex remains; returns the reduced graph and
/// the number of vertices removed.
std::pair<Graph, int> strip_pendants(const Graph& g);

/// Fires with lazy cop number <= 2 when the maximum degree is at least n-4.
BoundVerdict delta_filter_lazy2(const Graph& g);

/// Fires with lazy cop number <= 3 when the maximum degree is at least n-9.
BoundVerdict delta_filter_lazy3(const Graph& g);

struct SolveOutcome {
    int cop_number = 0;
    int lazy_cop_number = 0;
    int domination_number = 0;
    bool dismantlable = false;
    std::map<std::pair<int, int>, int> capture_times;                 // (k, m) -> cop turns
    std::map<std::pair<int, int>, std::vector<int>> witness_placements;  // (k, m) -> placement
    std::vector<BoundVerdict> verdicts;  // reductions/filters applied (filtered path)
    int pendants_removed = 0;
};

/// Full classification of a connected graph. With use_filters the lazy number
/// is computed on the pendant-stripped graph, the domination squeeze may skip
/// the lazy solve, and degree filters are recorded; filters only ever cap the
/// ascent, so both paths return the same (c, c_L, gamma).
SolveOutcome classify(const Graph& g, bool use_filters,
                      std::uint64_t state_budget = default_state_budget());

}  // namespace lazycop

#endif
