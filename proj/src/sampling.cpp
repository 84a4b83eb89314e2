#include "rsc/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace rsc {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t trialSeed(uint64_t master, uint64_t trial) { return splitmix64(splitmix64(master) ^ splitmix64(~trial)); }

std::vector<SimplexRank> sampleBernoulliRanks(uint64_t total, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
  std::vector<SimplexRank> out;
  if (p == 0.0 || total == 0) return out;
  if (p == 1.0) {
    out.resize(total);
    for (uint64_t i = 0; i < total; ++i) out[i] = i;
    return out;
  }
  // Geometric gaps between kept ranks.
  const double logq = std::log1p(-p);
  uint64_t next = 0;
  while (true) {
    double u = 1.0 - uniform01(rng);  // (0, 1]
    double gap = std::floor(std::log(u) / logq);
    if (gap >= static_cast<double>(total - next)) break;
    next += static_cast<uint64_t>(gap);
    out.push_back(next);
    if (++next >= total) break;
  }
  return out;
}

}  // namespace rsc
