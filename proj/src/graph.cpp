#include "lazycop/graph.hpp"

namespace lazycop {

Graph new_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::pair<VertexSet, VertexSet> neighborhoods(const Graph& g, int u) {
    return {g.neighbors(u), g.closed_neighbors(u)};
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.min_degree = kMaxVertices;
    int total = 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        total += d;
    }
    s.edge_count = total / 2;
    return s;
}

bool is_connected(const Graph& g) {
    return component_count(g) == 1;
}

int component_count(const Graph& g) {
    return static_cast<int>(components(g).size());
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t seen = 0;
    const std::uint64_t all = VertexSet::all(g.n()).mask;
    while (seen != all) {
        std::uint64_t frontier = std::uint64_t{1} << std::countr_zero(~seen & all);
        std::uint64_t comp = 0;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.row(std::countr_zero(m));
            frontier = next & ~comp;
        }
        out.push_back(VertexSet(comp));
        seen |= comp;
    }
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet keep) {
    if (keep.empty()) throw Error("induced_subgraph: empty keep set");
    if (!keep.subset_of(g.vertices())) throw Error("induced_subgraph: keep set exceeds vertex range");
    std::vector<int> old_of_new = keep.to_vector();
    Graph h(static_cast<int>(old_of_new.size()));
    for (std::size_t i = 0; i < old_of_new.size(); ++i)
        for (std::size_t j = i + 1; j < old_of_new.size(); ++j)
            if (g.adjacent(old_of_new[i], old_of_new[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {h, old_of_new};
}

Graph delete_vertex(const Graph& g, int v) {
    VertexSet keep = g.vertices();
    keep.remove(v);
    return induced_subgraph(g, keep).first;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    long long size = static_cast<long long>(g.n()) * h.n();
    if (size > kMaxVertices)
        throw Error("cartesian product has " + std::to_string(size) + " vertices, cap is 64");
    Graph p(static_cast<int>(size));
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < h.n(); ++b) {
            for (int b2 : h.neighbors(b))
                if (b2 > b) p.add_edge(a * h.n() + b, a * h.n() + b2);
            for (int a2 : g.neighbors(a))
                if (a2 > a) p.add_edge(a * h.n() + b, a2 * h.n() + b);
        }
    return p;
}

Graph permute(const Graph& g, const std::vector<int>& new_label) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) h.add_edge(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
    return h;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer 5-cycle
        g.add_edge(i, i + 5);              // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph rooks(int n) {
    if (n < 1 || n * n > kMaxVertices) throw Error("rooks board side out of range (n*n must be <= 64)");
    return cartesian_product(complete(n), complete(n));
}

}  // namespace lazycop
