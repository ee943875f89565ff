#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace twistform {

/// Largest ambient dimension supported by the coefficient storage.
inline constexpr int kMaxDim = 8;

/// Index tuples are stored as bitmasks over basis positions 0..m-1.
using IndexMask = std::uint32_t;

int binomial(int n, int k);

/// Strictly increasing q-tuples of {0..m-1} in lexicographic order.
std::span<const IndexMask> combinations(int m, int q);

/// Position of `mask` inside combinations(m, popcount(mask)).
int rank_of(int m, IndexMask mask);

/// Sign of the permutation that sorts the concatenation (a, b) of two
/// increasing tuples; zero when they share an index.
int concat_sign(IndexMask a, IndexMask b);

std::vector<int> mask_indices(IndexMask mask);
IndexMask indices_mask(std::span<const int> indices);

int popcount(IndexMask mask);

}  // namespace twistform
