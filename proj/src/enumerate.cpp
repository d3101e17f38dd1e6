#include "lazycop/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "lazycop/graph6.hpp"

namespace lazycop {

void Constraints::validate() const {
    if (n < 1 || n > kMaxVertices) throw Error("constraints: n out of range 1..64");
    if (min_deg < 0 || min_deg > effective_max_deg() || effective_max_deg() > n - 1)
        throw Error("constraints: inconsistent degree bounds");
    if (min_edges < 0 || min_edges > effective_max_edges())
        throw Error("constraints: inconsistent edge bounds");
}

bool Constraints::admits(const Graph& g) const {
    if (g.n() != n) return false;
    const DegreeStats s = degree_stats(g);
    if (s.min_degree < min_deg || s.max_degree > effective_max_deg()) return false;
    if (s.edge_count < min_edges || s.edge_count > effective_max_edges()) return false;
    if (connected_only && !is_connected(g)) return false;
    return true;
}

namespace {

// Necessary conditions for an i-vertex intermediate to still reach an
// n-vertex graph within the constraints; degrees and edges only grow, and
// each future vertex adds at most one edge to any current vertex.
bool future_feasible(const Graph& g, const Constraints& c) {
    const int remaining = c.n - g.n();
    const int max_deg = c.effective_max_deg();
    const DegreeStats s = degree_stats(g);
    if (s.max_degree > max_deg) return false;
    if (s.edge_count > c.effective_max_edges()) return false;

    long long deficit = 0;
    for (int v = 0; v < g.n(); ++v) {
        const int d = c.min_deg - g.degree(v);
        if (d > remaining) return false;
        if (d > 0) deficit += d;
    }
    if (deficit > static_cast<long long>(remaining) * max_deg) return false;

    if (c.connected_only) {
        const int comps = component_count(g);
        if (comps > 1) {
            if (remaining == 0) return false;
            if (max_deg >= 2 &&
                comps > remaining * (max_deg - 1) + 1)
                return false;
            if (max_deg < 2 && comps > 1) return false;
        }
    }
    return true;
}

}  // namespace

void enumerate_connected(const Constraints& c, const std::function<void(const Graph&)>& visit) {
    c.validate();
    if (c.n > 10) throw Error("exhaustive enumeration is capped at 10 vertices");

    std::vector<Graph> level{Graph(1)};
    for (int i = 2; i <= c.n; ++i) {
        const bool last = (i == c.n);
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        std::vector<Graph> next;
        for (const Graph& parent : level) {
            const std::uint32_t subsets = std::uint32_t{1} << (i - 1);
            for (std::uint32_t s = 0; s < subsets; ++s) {
                if (std::popcount(s) > c.effective_max_deg()) continue;
                bool degree_ok = true;
                for (std::uint32_t m = s; m && degree_ok; m &= m - 1)
                    degree_ok = parent.degree(std::countr_zero(m)) + 1 <= c.effective_max_deg();
                if (!degree_ok) continue;
                if (last && c.connected_only) {
                    // the final vertex must touch every parent component
                    bool touches_all = true;
                    for (const VertexSet& comp : components(parent))
                        touches_all = touches_all && (comp.mask & s) != 0;
                    if (!touches_all) continue;
                }

                Graph child(i);
                for (int u = 0; u < i - 1; ++u)
                    for (int v : parent.neighbors(u))
                        if (v > u) child.add_edge(u, v);
                for (std::uint32_t m = s; m; m &= m - 1)
                    child.add_edge(std::countr_zero(m), i - 1);

                if (last ? !c.admits(child) : !future_feasible(child, c)) continue;

                CanonicalResult cr = canonical_labeling(child);
                if (seen.contains(cr.form)) continue;

                // accept only from the canonical parent: deleting the new
                // vertex must match deleting the last-canonical-position one
                int w = -1;
                for (int v = 0; v < i; ++v)
                    if (cr.labeling[static_cast<std::size_t>(v)] == i - 1) {
                        w = v;
                        break;
                    }
                const bool accepted =
                    w == i - 1 ||
                    canonical_form(delete_vertex(child, i - 1)) == canonical_form(delete_vertex(child, w));
                if (!accepted) continue;

                next.push_back(permute(child, cr.labeling));
                seen.insert(std::move(cr.form));
            }
        }
        // emission order: lexicographic by the canonical upper-triangle encoding,
        // which for a canonical representative is its own graph6 body
        std::vector<std::pair<std::string, std::size_t>> order;
        order.reserve(next.size());
        for (std::size_t idx = 0; idx < next.size(); ++idx)
            order.emplace_back(to_graph6(next[idx]), idx);
        std::sort(order.begin(), order.end());
        std::vector<Graph> sorted;
        sorted.reserve(next.size());
        for (const auto& [key, idx] : order) sorted.push_back(std::move(next[idx]));
        level = std::move(sorted);
    }

    for (const Graph& g : level)
        if (c.n > 1 || c.admits(g)) visit(g);
}

std::vector<Graph> enumerate_connected(const Constraints& c) {
    std::vector<Graph> out;
    enumerate_connected(c, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<CanonicalForm> naive_enumerate(int n) {
    if (n < 1 || n > 7) throw Error("naive_enumerate is capped at 7 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    std::unordered_set<CanonicalForm, CanonicalFormHash> classes;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if ((mask >> t) & 1) g.add_edge(pairs[t].first, pairs[t].second);
        if (!is_connected(g)) continue;
        classes.insert(canonical_form(g));
    }
    std::vector<CanonicalForm> out(classes.begin(), classes.end());
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> prob(0.15, 0.65);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        const double p = prob(rng);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

Graph6StreamStats read_graph6_stream(std::istream& in, const std::function<void(const Graph&)>& visit,
                                     bool strict, std::ostream* errlog) {
    Graph6StreamStats stats;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++stats.lines;
        try {
            Graph g = parse_graph6(line);
            ++stats.graphs;
            visit(g);
        } catch (const Error& e) {
            ++stats.bad_lines;
            if (strict) throw Error("line " + std::to_string(lineno) + ": " + e.what());
            if (errlog) *errlog << "line " << lineno << ": " << e.what() << '\n';
        }
    }
    return stats;
}

}  // namespace lazycop
