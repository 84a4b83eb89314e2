#include "rsc/binomial.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace rsc {
namespace {

class BinomialTable {
 public:
  BinomialTable() : table_((kMaxBinomialN + 1) * (kMaxBinomialK + 1), 0) {
    constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();
    for (int n = 0; n <= kMaxBinomialN; ++n) {
      at(n, 0) = 1;
      for (int k = 1; k <= kMaxBinomialK && k <= n; ++k) {
        uint64_t a = at(n - 1, k - 1);
        uint64_t b = at(n - 1, k);
        at(n, k) = (a > kSaturated - b) ? kSaturated : a + b;
      }
    }
  }

  uint64_t get(int n, int k) const { return table_[n * (kMaxBinomialK + 1) + k]; }

 private:
  uint64_t& at(int n, int k) { return table_[n * (kMaxBinomialK + 1) + k]; }

  std::vector<uint64_t> table_;
};

const BinomialTable& table() {
  static const BinomialTable instance;
  return instance;
}

}  // namespace

uint64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  if (n > kMaxBinomialN || k > kMaxBinomialK)
    throw std::out_of_range("binomial: arguments outside the precomputed table");
  return table().get(static_cast<int>(n), static_cast<int>(k));
}

SimplexRank colexRank(std::span<const Vertex> sorted) {
  SimplexRank rank = 0;
  for (size_t i = 0; i < sorted.size(); ++i) rank += binomial(sorted[i], static_cast<int64_t>(i) + 1);
  return rank;
}

void colexUnrank(SimplexRank rank, int size, std::span<Vertex> out) {
  int64_t upper = kMaxBinomialN;
  for (int i = size - 1; i >= 0; --i) {
    // largest v in [i, upper) with C(v, i + 1) <= rank
    int64_t lo = i, hi = upper - 1;
    while (lo < hi) {
      int64_t mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, i + 1) <= rank)
        lo = mid;
      else
        hi = mid - 1;
    }
    out[i] = static_cast<Vertex>(lo);
    rank -= binomial(lo, i + 1);
    upper = lo;
  }
}

}  // namespace rsc
