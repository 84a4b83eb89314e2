#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rsc/binomial.hpp"

namespace rsc {

using Rng = std::mt19937_64;

uint64_t splitmix64(uint64_t x);

/// Seed of trial `trial` under master seed `master`; trial t is
/// reproducible without generating trials 0..t-1.
uint64_t trialSeed(uint64_t master, uint64_t trial);

/// Uniform on [0, 1) with 53 random bits, identical on every platform.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Colex ranks of the (k+1)-sets kept by independent coin flips with
/// probability p, in increasing order.
std::vector<SimplexRank> sampleBernoulliRanks(uint64_t total, double p, Rng& rng);

}  // namespace rsc
