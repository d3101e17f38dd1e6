#ifndef LAZYCOP_MULTISET_INDEX_HPP
#define LAZYCOP_MULTISET_INDEX_HPP

#include <cstdint>
#include <span>

namespace lazycop {

/// C(n, k), exact in 64 bits for the ranges used here (n <= 80, k <= 16).
std::uint64_t binomial(int n, int k);

/// Number of sorted k-multisets over {0..n-1}: C(n+k-1, k).
std::uint64_t multiset_count(int n, int k);

/// Colexicographic rank of a sorted multiset; inverse of multiset_unrank.
/// Throws on unsorted or out-of-range input.
std::uint64_t multiset_rank(std::span<const int> sorted, int n);

/// Writes the sorted multiset with the given colex rank into out[0..k).
void multiset_unrank(std::uint64_t index, int k, int n, int* out);

}  // namespace lazycop

#endif
