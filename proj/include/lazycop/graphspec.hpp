#ifndef LAZYCOP_GRAPHSPEC_HPP
#define LAZYCOP_GRAPHSPEC_HPP

#include <string>

#include "lazycop/graph.hpp"

namespace lazycop {

/// Parses a graph description:
///   petersen | complete N | cycle N | path N | rook N | cart SPEC SPEC |
///   file PATH (edge list, lines "u v") | g6 TEXT | a bare graph6 literal
Graph parse_graph_spec(const std::string& spec);

}  // namespace lazycop

#endif
