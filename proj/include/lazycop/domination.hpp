#ifndef LAZYCOP_DOMINATION_HPP
#define LAZYCOP_DOMINATION_HPP

#include <utility>
#include <vector>

#include "lazycop/graph.hpp"

namespace lazycop {

/// Exact minimum dominating set by branch and bound (greedy upper bound,
/// uncovered-vertex lower bound). Practical up to roughly 30 vertices.
VertexSet min_dominating_set(const Graph& g);

int domination_number(const Graph& g);

/// Repeatedly removes a vertex whose closed neighborhood is contained in
/// another's; true iff the graph reduces to a single vertex. The elimination
/// order (original vertex ids) is returned when it does.
std::pair<bool, std::vector<int>> is_dismantlable(const Graph& g);

}  // namespace lazycop

#endif
