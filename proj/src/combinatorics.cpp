#include "twistform/combinatorics.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace twistform {

namespace {

struct Tables {
  // by_grade[m][q] lists the q-subsets of {0..m-1}; rank[m][mask] inverts it.
  std::array<std::array<std::vector<IndexMask>, kMaxDim + 1>, kMaxDim + 1> by_grade;
  std::array<std::vector<int>, kMaxDim + 1> rank;

  Tables() {
    for (int m = 1; m <= kMaxDim; ++m) {
      const IndexMask full = IndexMask{1} << m;
      rank[m].assign(full, -1);
      for (int q = 0; q <= m; ++q) {
        auto& list = by_grade[m][q];
        fill(m, q, 0, 0, list);
        for (int r = 0; r < static_cast<int>(list.size()); ++r) rank[m][list[r]] = r;
      }
    }
  }

  // Lexicographic enumeration: smallest leading index first.
  static void fill(int m, int remaining, int start, IndexMask prefix, std::vector<IndexMask>& out) {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (int i = start; i <= m - remaining; ++i)
      fill(m, remaining - 1, i + 1, prefix | (IndexMask{1} << i), out);
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

void check_dim(int m) {
  if (m < 1 || m > kMaxDim)
    throw std::out_of_range("dimension must lie in 1.." + std::to_string(kMaxDim) + ", got " +
                            std::to_string(m));
}

}  // namespace

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

std::span<const IndexMask> combinations(int m, int q) {
  check_dim(m);
  if (q < 0 || q > m) return {};
  return tables().by_grade[m][q];
}

int rank_of(int m, IndexMask mask) {
  check_dim(m);
  if (mask >= (IndexMask{1} << m)) throw std::out_of_range("index outside the basis");
  return tables().rank[m][mask];
}

int concat_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Each element of b must hop over every larger element of a.
  int swaps = 0;
  for (IndexMask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<int> mask_indices(IndexMask mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

IndexMask indices_mask(std::span<const int> indices) {
  IndexMask m = 0;
  for (int i : indices) m |= IndexMask{1} << i;
  return m;
}

int popcount(IndexMask mask) { return std::popcount(mask); }

}  // namespace twistform
