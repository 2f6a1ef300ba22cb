#include "cyclolie/exterior.hpp"

namespace cyclolie {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
  }
  return acc;
}

std::vector<MultiIndex> enumerate_multiindices(int n, int p) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > n) return out;
  MultiIndex cur(p);
  // Iterative combination enumeration in lexicographic order.
  for (int i = 0; i < p; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Unshuffle> unshuffles(int total, int first_block) {
  std::vector<Unshuffle> out;
  if (first_block < 0 || first_block > total) return out;
  for (const MultiIndex& pick : enumerate_multiindices(total, first_block)) {
    Unshuffle u;
    u.first.reserve(first_block);
    for (int x : pick) u.first.push_back(x - 1);
    std::size_t fi = 0;
    for (int pos = 0; pos < total; ++pos) {
      if (fi < u.first.size() && u.first[fi] == pos)
        ++fi;
      else
        u.second.push_back(pos);
    }
    int s = 1;
    for (int a : u.first)
      for (int b : u.second)
        if (b < a) s = -s;
    u.sign = s;
    out.push_back(std::move(u));
  }
  return out;
}

std::optional<std::pair<MultiIndex, int>> sort_with_sign(const std::vector<int>& indices) {
  MultiIndex lst = indices;
  int sign = 1;
  // Bubble sort counts exactly the inversions, i.e. the permutation sign.
  const std::size_t n = lst.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 + i < n; ++j) {
      if (lst[j] > lst[j + 1]) {
        std::swap(lst[j], lst[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lst[i] == lst[i + 1]) return std::nullopt;
  return std::make_pair(std::move(lst), sign);
}

int split_sign(const MultiIndex& a, const MultiIndex& b) {
  int s = 1;
  for (int x : a)
    for (int y : b)
      if (y < x) s = -s;
  return s;
}

}  // namespace cyclolie
