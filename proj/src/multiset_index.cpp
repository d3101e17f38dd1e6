#include "lazycop/multiset_index.hpp"

#include <array>
#include <string>

#include "lazycop/graph.hpp"

namespace lazycop {

namespace {
constexpr int kMaxN = 81;
constexpr int kMaxK = 17;

struct Table {
    std::array<std::array<std::uint64_t, kMaxK>, kMaxN> c{};
    Table() {
        for (int n = 0; n < kMaxN; ++n) {
            c[static_cast<std::size_t>(n)][0] = 1;
            for (int k = 1; k < kMaxK; ++k)
                c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    n == 0 ? 0
                           : c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                                 c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        }
    }
};
const Table kTable;
}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n >= kMaxN || k >= kMaxK) throw Error("binomial argument out of table range");
    return kTable.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t multiset_count(int n, int k) {
    return binomial(n + k - 1, k);
}

std::uint64_t multiset_rank(std::span<const int> sorted, int n) {
    std::uint64_t r = 0;
    int prev = 0;
    for (std::size_t t = 0; t < sorted.size(); ++t) {
        const int v = sorted[t];
        if (v < 0 || v >= n) throw Error("multiset_rank: element out of range");
        if (t > 0 && v < prev) throw Error("multiset_rank: input not sorted ascending");
        prev = v;
        r += binomial(v + static_cast<int>(t), static_cast<int>(t) + 1);
    }
    return r;
}

void multiset_unrank(std::uint64_t index, int k, int n, int* out) {
    if (index >= multiset_count(n, k))
        throw Error("multiset_unrank: index " + std::to_string(index) + " out of range");
    for (int t = k - 1; t >= 0; --t) {
        int v = n - 1;
        while (binomial(v + t, t + 1) > index) --v;
        out[t] = v;
        index -= binomial(v + t, t + 1);
    }
}

}  // namespace lazycop
