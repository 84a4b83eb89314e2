#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rsc/binomial.hpp"
#include "rsc/simplex.hpp"

using namespace rsc;

TEST_CASE("binomial matches Pascal's triangle") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= std::min(n, 16); ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(200, 3) == 1313400);
  CHECK_THROWS_AS(binomial(kMaxBinomialN + 1, 2), std::out_of_range);
}

TEST_CASE("colex rank enumerates subsets in colex order") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= std::min(n, 5); ++k) {
      auto subsets = oracle::colexSubsets(n, k);
      REQUIRE(subsets.size() == binomial(n, k));
      for (size_t r = 0; r < subsets.size(); ++r) {
        std::vector<Vertex> vs(subsets[r].begin(), subsets[r].end());
        CHECK(colexRank(vs) == r);
        std::vector<Vertex> back(k);
        colexUnrank(r, k, back);
        CHECK(back == vs);
      }
    }
}

TEST_CASE("rank round trip on random large simplices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int size = 1 + static_cast<int>(rng() % 8);
    std::vector<Vertex> vs;
    while (static_cast<int>(vs.size()) < size) {
      Vertex v = static_cast<Vertex>(rng() % 256);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    Simplex s{std::span<const Vertex>(vs)};
    CHECK(Simplex::fromRank(s.rank(), s.size()) == s);
  }
}

TEST_CASE("simplex construction sorts and rejects bad input") {
  Simplex s{3, 1, 2};
  CHECK(s.vertices()[0] == 1);
  CHECK(s.maxVertex() == 3);
  CHECK(s.dimension() == 2);
  CHECK_THROWS_AS((Simplex{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS((Simplex{-1, 2}), std::invalid_argument);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK(s.with(0) == Simplex{0, 1, 2, 3});
  CHECK(s.without(2) == Simplex{1, 3});
  CHECK(Simplex{1, 3}.isSubsetOf(s));
  CHECK(s.toString(1) == "2 3 4");
}

TEST_CASE("set operations and subset enumeration") {
  Simplex a{0, 2, 4}, b{2, 3};
  CHECK(setUnion(a, b) == Simplex{0, 2, 3, 4});
  CHECK(setDifference(a, b) == Simplex{0, 4});
  auto pairs = allSubsetsOfSize(Simplex{0, 1, 2, 3}, 2);
  CHECK(pairs.size() == 6);
  int facets = 0;
  forEachFacet(a, [&](const Simplex& f, Vertex removed) {
    CHECK(f.size() == 2);
    CHECK_FALSE(f.contains(removed));
    ++facets;
  });
  CHECK(facets == 3);
  CHECK(colexLess(Simplex{0, 1, 2}, Simplex{0, 1, 3}));
  CHECK(colexLess(Simplex{1, 2}, Simplex{0, 3}));
}
