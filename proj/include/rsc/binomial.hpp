#pragma once

#include <cstdint>
#include <span>

namespace rsc {

using Vertex = int32_t;
using SimplexRank = uint64_t;

constexpr int kMaxBinomialN = 4096;
constexpr int kMaxBinomialK = 17;

/// Binomial coefficient C(n, k) from a precomputed table. Returns 0 when
/// k < 0 or k > n and saturates at UINT64_MAX on overflow.
uint64_t binomial(int64_t n, int64_t k);

/// Colexicographic rank of a strictly increasing vertex sequence:
/// sum over i of C(v_i, i + 1).
SimplexRank colexRank(std::span<const Vertex> sorted);

/// Inverse of colexRank for a set of the given size. Writes the vertices in
/// increasing order.
void colexUnrank(SimplexRank rank, int size, std::span<Vertex> out);

}  // namespace rsc
