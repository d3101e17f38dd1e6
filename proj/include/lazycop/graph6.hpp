#ifndef LAZYCOP_GRAPH6_HPP
#define LAZYCOP_GRAPH6_HPP

#include <string>

#include "lazycop/graph.hpp"

namespace lazycop {

/// graph6 text encoding: size byte(s), then the upper triangle in column order
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per printable character
/// (value + 63), zero-padded to a multiple of 6 bits.
std::string to_graph6(const Graph& g);

/// Strict parser; accepts and strips an optional ">>graph6<<" header. Rejects
/// characters outside 63..126, wrong body length, and nonzero padding bits, so
/// that to_graph6(parse_graph6(t)) == t for every accepted t.
Graph parse_graph6(const std::string& text);

}  // namespace lazycop

#endif
