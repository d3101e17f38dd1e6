#include "lazycop/canonical.hpp"

#include <array>
#include <bit>

namespace lazycop {

namespace {

using Cells = std::vector<std::uint64_t>;  // ordered partition, one bitmask per cell

// Refine the ordered partition to the equitable fixpoint. Every cell in
// `work` is pending as a splitter; cells split into subcells ordered by
// ascending neighbor count, which keeps the cell order a labeling invariant.
void refine(const Graph& g, Cells& cells, Cells& work) {
    std::size_t head = 0;
    while (head < work.size()) {
        const std::uint64_t splitter = work[head++];
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            const std::uint64_t cell = cells[ci];
            if (std::popcount(cell) <= 1) continue;
            std::array<std::uint64_t, kMaxVertices + 1> bucket{};
            int max_count = 0;
            for (std::uint64_t m = cell; m; m &= m - 1) {
                const int v = std::countr_zero(m);
                const int c = std::popcount(g.row(v) & splitter);
                bucket[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
                max_count = std::max(max_count, c);
            }
            if (bucket[static_cast<std::size_t>(max_count)] == cell) continue;  // no split
            bool first = true;
            std::size_t at = ci;
            for (int c = 0; c <= max_count; ++c) {
                const std::uint64_t part = bucket[static_cast<std::size_t>(c)];
                if (!part) continue;
                if (first) {
                    cells[ci] = part;
                    first = false;
                } else {
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(++at), part);
                }
                work.push_back(part);
            }
        }
    }
    work.clear();
}

struct Searcher {
    const Graph& g;
    int n;
    bool have_best = false;
    std::vector<std::uint8_t> best;
    std::vector<int> best_label;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.n()) {}

    // vertices u, v are interchangeable by the transposition automorphism
    bool twins(int u, int v) const {
        const std::uint64_t off = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return (g.row(u) & off) == (g.row(v) & off);
    }

    std::vector<std::uint8_t> encode(const std::vector<int>& old_of_new) const {
        const int bits = n * (n - 1) / 2;
        std::vector<std::uint8_t> out(static_cast<std::size_t>((bits + 7) / 8), 0);
        int t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (g.adjacent(old_of_new[static_cast<std::size_t>(i)],
                               old_of_new[static_cast<std::size_t>(j)]))
                    out[static_cast<std::size_t>(t) / 8] |=
                        static_cast<std::uint8_t>(0x80u >> (t % 8));
        return out;
    }

    // Compare the encoded bits fixed by the first `fixed` singleton cells
    // against the incumbent. <0 / 0 / >0 like memcmp.
    int compare_prefix(const Cells& cells, int fixed) const {
        int t = 0;
        for (int j = 1; j < fixed; ++j) {
            const int old_j = std::countr_zero(cells[static_cast<std::size_t>(j)]);
            for (int i = 0; i < j; ++i, ++t) {
                const int old_i = std::countr_zero(cells[static_cast<std::size_t>(i)]);
                const int bit = g.adjacent(old_i, old_j) ? 1 : 0;
                const int best_bit =
                    (best[static_cast<std::size_t>(t) / 8] >> (7 - t % 8)) & 1;
                if (bit != best_bit) return bit - best_bit;
            }
        }
        return 0;
    }

    void leaf(const Cells& cells) {
        std::vector<int> old_of_new(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            old_of_new[static_cast<std::size_t>(i)] = std::countr_zero(cells[static_cast<std::size_t>(i)]);
        std::vector<std::uint8_t> bytes = encode(old_of_new);
        if (!have_best || bytes < best) {
            best = std::move(bytes);
            have_best = true;
            best_label.assign(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                best_label[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(i)])] = i;
        }
    }

    void dfs(const Cells& cells) {
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (std::popcount(cells[i]) > 1) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            leaf(cells);
            return;
        }
        if (have_best && compare_prefix(cells, target) > 0) return;

        const std::uint64_t cell = cells[static_cast<std::size_t>(target)];
        for (std::uint64_t m = cell; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            bool skip = false;
            for (std::uint64_t mm = cell & ((std::uint64_t{1} << v) - 1); mm && !skip; mm &= mm - 1)
                skip = twins(std::countr_zero(mm), v);
            if (skip) continue;

            Cells child = cells;
            child[static_cast<std::size_t>(target)] = std::uint64_t{1} << v;
            child.insert(child.begin() + target + 1, cell & ~(std::uint64_t{1} << v));
            Cells work{std::uint64_t{1} << v, cell & ~(std::uint64_t{1} << v)};
            refine(g, child, work);
            dfs(child);
        }
    }
};

}  // namespace

CanonicalResult canonical_labeling(const Graph& g) {
    Searcher s(g);
    Cells cells{VertexSet::all(g.n()).mask};
    Cells work = cells;
    refine(g, cells, work);
    s.dfs(cells);
    CanonicalResult out;
    out.form.n = g.n();
    out.form.bytes = std::move(s.best);
    out.labeling = std::move(s.best_label);
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    return canonical_labeling(g).form;
}

Graph canonical_representative(const Graph& g) {
    return permute(g, canonical_labeling(g).labeling);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.n() == b.n() && canonical_form(a) == canonical_form(b);
}

}  // namespace lazycop
