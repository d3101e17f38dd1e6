#ifndef LAZYCOP_GRAPH_HPP
#define LAZYCOP_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lazycop {

inline constexpr int kMaxVertices = 64;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Subset of the vertices of a graph on at most 64 vertices, one bit per vertex.
struct VertexSet {
    std::uint64_t mask = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t m) : mask(m) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    bool empty() const { return mask == 0; }
    int count() const { return std::popcount(mask); }
    bool contains(int v) const { return (mask >> v) & 1u; }
    void add(int v) { mask |= std::uint64_t{1} << v; }
    void remove(int v) { mask &= ~(std::uint64_t{1} << v); }
    int lowest() const { return std::countr_zero(mask); }

    bool subset_of(VertexSet other) const { return (mask & ~other.mask) == 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask | b.mask); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask & b.mask); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask & ~b.mask); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.mask == b.mask; }

    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {mask}; }
    iterator end() const { return {0}; }
};

/// Simple undirected graph on 1..64 vertices, stored as one neighbor bitmask per vertex.
/// Rows stay symmetric and irreflexive; vertices are 0-based.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
        if (n < 1 || n > kMaxVertices)
            throw Error("vertex count out of range 1..64: " + std::to_string(n));
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("self-loop requested at vertex " + std::to_string(u));
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    VertexSet neighbors(int u) const {
        check_vertex(u);
        return VertexSet(rows_[static_cast<std::size_t>(u)]);
    }
    VertexSet closed_neighbors(int u) const {
        check_vertex(u);
        return VertexSet(rows_[static_cast<std::size_t>(u)] | (std::uint64_t{1} << u));
    }

    int degree(int u) const { return std::popcount(rows_[static_cast<std::size_t>(u)]); }

    std::uint64_t row(int u) const { return rows_[static_cast<std::size_t>(u)]; }

    VertexSet vertices() const { return VertexSet::all(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_)
            throw Error("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

Graph new_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    int edge_count = 0;
};

/// (open, closed) neighborhood of u.
std::pair<VertexSet, VertexSet> neighborhoods(const Graph& g, int u);

DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);

/// Number of connected components.
int component_count(const Graph& g);

/// Vertex sets of the connected components, ordered by lowest member.
std::vector<VertexSet> components(const Graph& g);

/// Subgraph induced by `keep`, vertices relabeled 0..|keep|-1 in ascending old order.
/// Second result maps each new index to its old vertex.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet keep);

/// Induced subgraph with one vertex dropped.
Graph delete_vertex(const Graph& g, int v);

/// Cartesian product; vertex (a, b) of g x h maps to index a*h.n() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Relabeled copy: new_label[old] gives each vertex's new index.
Graph permute(const Graph& g, const std::vector<int>& new_label);

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();
Graph rooks(int n);

}  // namespace lazycop

#endif
