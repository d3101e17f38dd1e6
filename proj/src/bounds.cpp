#include "lazycop/bounds.hpp"

#include "lazycop/domination.hpp"

namespace lazycop {

std::pair<Graph, int> strip_pendants(const Graph& g) {
    Graph h = g;
    int removed = 0;
    for (;;) {
        if (h.n() == 1) break;
        int pendant = -1;
        for (int v = 0; v < h.n() && pendant < 0; ++v)
            if (h.degree(v) == 1) pendant = v;
        if (pendant < 0) break;
        h = delete_vertex(h, pendant);
        ++removed;
    }
    return {h, removed};
}

BoundVerdict delta_filter_lazy2(const Graph& g) {
    if (degree_stats(g).max_degree >= g.n() - 4)
        return {BoundKind::DeltaImpliesLazyLE2, 2,
                "max degree >= n-4 caps the lazy cop number at 2"};
    return {BoundKind::NoFilter, 0, ""};
}

BoundVerdict delta_filter_lazy3(const Graph& g) {
    if (degree_stats(g).max_degree >= g.n() - 9)
        return {BoundKind::DeltaImpliesLazyLE3, 3,
                "max degree >= n-9 caps the lazy cop number at 3"};
    return {BoundKind::NoFilter, 0, ""};
}

namespace {

// Ascent k = 1, 2, ... recording the winning placement and capture time.
int solve_ascending(const Graph& g, bool lazy, int upper_bound, std::uint64_t budget,
                    SolveOutcome& out) {
    for (int k = 1; k <= upper_bound; ++k) {
        const Rules rules = lazy ? Rules::lazy(k) : Rules::standard(k);
        WinTable wt = solve_attractor(g, rules, budget);
        auto [win, witness] = cops_can_win(wt);
        if (win) {
            out.capture_times[{k, rules.max_movers}] = capture_time(wt);
            out.witness_placements[{k, rules.max_movers}] = *witness;
            return k;
        }
    }
    throw Error("internal: domination-number placement failed to win");
}

}  // namespace

SolveOutcome classify(const Graph& g, bool use_filters, std::uint64_t state_budget) {
    if (!is_connected(g)) throw Error("classify requires a connected graph");
    SolveOutcome out;
    out.domination_number = domination_number(g);
    out.dismantlable = is_dismantlable(g).first;
    out.cop_number = solve_ascending(g, false, out.domination_number, state_budget, out);

    if (!use_filters) {
        out.lazy_cop_number = solve_ascending(g, true, out.domination_number, state_budget, out);
        return out;
    }

    if (out.cop_number == out.domination_number) {
        // c <= c_L <= gamma pins the lazy number without a lazy solve
        out.lazy_cop_number = out.cop_number;
        out.verdicts.push_back({BoundKind::SandwichExact, out.lazy_cop_number,
                                "cop number equals domination number"});
        return out;
    }

    auto [reduced, removed] = strip_pendants(g);
    out.pendants_removed = removed;
    if (removed > 0)
        out.verdicts.push_back({BoundKind::PendantReduced, removed,
                                "degree-1 cascade preserves the lazy cop number"});
    for (BoundVerdict v : {delta_filter_lazy2(reduced), delta_filter_lazy3(reduced)})
        if (v.kind != BoundKind::NoFilter) out.verdicts.push_back(std::move(v));

    const Graph& target = removed > 0 ? reduced : g;
    const int bound = removed > 0 ? domination_number(target) : out.domination_number;
    SolveOutcome lazy_out;  // witnesses on the reduced graph are not meaningful for g
    out.lazy_cop_number = solve_ascending(target, true, bound, state_budget, lazy_out);
    if (removed == 0) {
        out.capture_times.merge(lazy_out.capture_times);
        out.witness_placements.merge(lazy_out.witness_placements);
    }
    return out;
}

}  // namespace lazycop
