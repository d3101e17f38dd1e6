#ifndef LAZYCOP_ENUMERATE_HPP
#define LAZYCOP_ENUMERATE_HPP

#include <functional>
#include <iosfwd>
#include <random>
#include <vector>

#include "lazycop/canonical.hpp"
#include "lazycop/graph.hpp"

namespace lazycop {

/// Degree/edge-count constraints for exhaustive generation. -1 leaves a
/// maximum unbounded.
struct Constraints {
    int n = 1;
    int min_deg = 0;
    int max_deg = -1;
    long long min_edges = 0;
    long long max_edges = -1;
    bool connected_only = true;

    int effective_max_deg() const { return max_deg < 0 ? n - 1 : max_deg; }
    long long effective_max_edges() const {
        const long long cap = static_cast<long long>(n) * (n - 1) / 2;
        return max_edges < 0 ? cap : max_edges;
    }
    void validate() const;
    bool admits(const Graph& g) const;
};

/// One canonical representative per isomorphism class satisfying the
/// constraints, in ascending canonical-encoding order. Generation is by
/// vertex augmentation with a canonical-deletion acceptance test, so each
/// class is produced exactly once. Capped at 10 vertices.
void enumerate_connected(const Constraints& c,
                         const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_connected(const Constraints& c);

/// Independent oracle: scans all 2^C(n,2) labeled graphs, keeps the connected
/// ones, dedups by canonical form. Sorted. Capped at 7 vertices.
std::vector<CanonicalForm> naive_enumerate(int n);

/// Uniform-ish random connected graph on n vertices: edge probability drawn
/// per graph, resampled until connected.
Graph random_connected_graph(int n, std::mt19937_64& rng);

struct Graph6StreamStats {
    long long lines = 0;
    long long graphs = 0;
    long long bad_lines = 0;
};

/// Decodes one graph6 value per nonempty line. Malformed lines are reported
/// to errlog with their line number; strict mode throws on the first one.
Graph6StreamStats read_graph6_stream(std::istream& in,
                                     const std::function<void(const Graph&)>& visit,
                                     bool strict = false, std::ostream* errlog = nullptr);

}  // namespace lazycop

#endif
