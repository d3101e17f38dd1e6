#ifndef LAZYCOP_CANONICAL_HPP
#define LAZYCOP_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "lazycop/graph.hpp"

namespace lazycop {

/// Labeling-invariant encoding: equal for two graphs of the same order exactly
/// when they are isomorphic. Bytes hold the upper triangle of the adjacency
/// matrix under the canonical labeling, column order, packed MSB-first.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.bytes == b.bytes;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.bytes < b.bytes;
    }
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](std::uint8_t byte) {
            h ^= byte;
            h *= 1099511628211ull;
        };
        mix(static_cast<std::uint8_t>(f.n));
        for (std::uint8_t b : f.bytes) mix(b);
        return static_cast<std::size_t>(h);
    }
};

struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> labeling;  // new_label[old]
};

/// Iterated neighbor-count partition refinement, then backtracking over the
/// cells of the refined partition; returns the lexicographically smallest
/// upper-triangle encoding among the candidate labelings, plus one labeling
/// achieving it.
CanonicalResult canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled by its canonical labeling.
Graph canonical_representative(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace lazycop

#endif
