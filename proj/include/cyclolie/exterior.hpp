#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclolie {

/// Strictly increasing list of 1-based basis indices.
using MultiIndex = std::vector<int>;

/// An (l, k)-unshuffle presented as the two position blocks it selects from
/// {0, ..., l+k-1}: `first` has the l positions of the first block, `second`
/// the remaining k, both increasing, plus the sign of the permutation that
/// reorders (first, second) back to 0..l+k-1.
struct Unshuffle {
  std::vector<int> first;
  std::vector<int> second;
  int sign = 1;
};

std::uint64_t binomial(unsigned n, unsigned k);

/// All strictly increasing multi-indices of length p in 1..n, lexicographic.
/// p > n yields the empty list; p = 0 yields the single empty index.
std::vector<MultiIndex> enumerate_multiindices(int n, int p);

/// All unshuffles splitting positions 0..total-1 into a first block of size
/// first_block and its complement, with permutation signs. The list has
/// C(total, first_block) members.
std::vector<Unshuffle> unshuffles(int total, int first_block);

/// Sort arbitrary indices into a MultiIndex, tracking the permutation sign.
/// Returns nullopt when an index repeats (antisymmetric evaluation is zero).
std::optional<std::pair<MultiIndex, int>> sort_with_sign(const std::vector<int>& indices);

/// Sign of the unshuffle placing sorted(a ∪ b) into the blocks (a, b); both
/// inputs strictly increasing and disjoint.
int split_sign(const MultiIndex& a, const MultiIndex& b);

}  // namespace cyclolie
