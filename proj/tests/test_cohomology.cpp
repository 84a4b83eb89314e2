#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "rsc/cohomology.hpp"
#include "rsc/obstructions.hpp"

using namespace rsc;

namespace {

Complex randomComplex(Model model, int n, int k, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Simplex> tops;
  for (uint64_t r = 0; r < binomial(n, k + 1); ++r)
    if (coin(rng)) tops.push_back(Simplex::fromRank(r, k + 1));
  return build(model, n, k, tops);
}

}  // namespace

TEST_CASE("betti numbers agree with exhaustive cochain counts") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Model model = trial % 3 == 0 ? Model::Y : Model::G;
    const int n = 4 + trial % 3;
    Complex c = randomComplex(model, n, 2, 0.1 + 0.015 * trial, rng);
    auto faces = oracle::closure(n, 2, oracle::toSets(c.topSimplices()), model == Model::Y);
    for (int j = 0; j <= 2; ++j) CHECK(betti(c, j) == oracle::betti(faces, j));
  }
}

TEST_CASE("coboundary of coboundary vanishes and Euler characteristic holds") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + trial % 3;
    Complex c = randomComplex(trial % 2 ? Model::Y : Model::G, 7, k, 0.15, rng);
    for (int j = 0; j + 1 < k; ++j) {
      Gf2Matrix a = coboundaryMatrix(c, j), b = coboundaryMatrix(c, j + 1);
      for (size_t col = 0; col < a.cols(); ++col) CHECK_FALSE(b.multiply(a.column(col)).any());
    }
    CohomologySummary s = summarize(c);
    long euler = 0;
    for (int d = 0; d <= k; ++d) euler += (d % 2 ? -1L : 1L) * static_cast<long>(s.fVector[d]) -
                                         (d % 2 ? -1L : 1L) * static_cast<long>(s.bettis[d]);
    CHECK(euler == 0);
    CHECK(s.bettis[0] == componentCount(c));
    auto faces = oracle::closure(7, k, oracle::toSets(c.topSimplices()), c.model() == Model::Y);
    CHECK(componentCount(c) == oracle::components(faces, 7));
  }
}

TEST_CASE("boundary and coboundary shapes") {
  Complex c = buildG(5, 2, {{0, 1, 2}, {1, 2, 3}});
  Gf2Matrix lowest = coboundaryMatrix(c, -1);
  CHECK(lowest.rows() == 5);
  CHECK(lowest.cols() == 0);
  Gf2Matrix top = coboundaryMatrix(c, 2);
  CHECK(top.rows() == 0);
  CHECK(top.cols() == 2);
  CHECK(boundaryMatrix(c, 1) == coboundaryMatrix(c, 0).transposed());
  CHECK(coboundaryRank(c, 1) == 2);
}

TEST_CASE("sparse first cohomology matches dense rank") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 8 + trial % 20;
    Complex c = randomComplex(trial % 4 == 0 ? Model::Y : Model::G, n, 2, 3.0 / n * (0.5 + (trial % 5) * 0.3), rng);
    CHECK(firstCohomologyDimension(c) == betti(c, 1));
    CohomologySummary dense = summarize(c, RankMethod::Dense);
    CohomologySummary sparse = summarize(c, RankMethod::Sparse);
    CHECK(dense.bettis == sparse.bettis);
  }
}

TEST_CASE("j-cohom-connectedness") {
  CHECK_FALSE(isJCohomConnected(buildG(5, 2, {{0, 1, 2}}), 1));
  CHECK(isJCohomConnected(buildG(5, 2, {{0, 1, 2}, {0, 3, 4}}), 1));
  CHECK_FALSE(isJCohomConnected(buildG(5, 2, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}}), 1));
  CHECK_THROWS_AS(isJCohomConnected(buildG(5, 2, {}), 2), std::out_of_range);
  CHECK_THROWS_AS(isJCohomConnected(buildG(5, 2, {}), 0), std::out_of_range);
}

TEST_CASE("cochains, cocycles and coboundary preimages") {
  Complex c = buildG(5, 2, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}});
  Cochain star = makeCochain(c, 1, std::vector<Simplex>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(isCocycle(c, star));
  auto preimage = findCoboundaryPreimage(c, star);
  REQUIRE(preimage.has_value());
  CHECK(coboundaryMatrix(c, 0).multiply(preimage->values) == star.values);
  CHECK(supportOf(c, star).size() == 4);

  Cochain single = makeCochain(c, 1, std::vector<Simplex>{{1, 2}});
  CHECK_FALSE(isCocycle(c, single));
  CHECK_THROWS_AS(makeCochain(c, 1, std::vector<Simplex>{{1, 4}}), std::invalid_argument);
  CHECK(findCoboundaryPreimage(c, zeroCochain(c, 0)).has_value());
  CHECK_FALSE(findCoboundaryPreimage(c, makeCochain(c, 0, std::vector<Simplex>{{2}})).has_value());
}

TEST_CASE("bad functions from flowers generate H^1 on the three-step fixture") {
  Complex middle = buildG(5, 2, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}});
  auto copies = findMjMinus(middle, 1);
  REQUIRE_FALSE(copies.empty());
  auto cocycles = nullspaceBasis(coboundaryMatrix(middle, 1));
  for (const Gf2Vector& z : cocycles) CHECK(isGeneratedByMjMinus(middle, Cochain{1, z}, copies));
  bool someBad = false;
  for (const MjMinusCopy& copy : copies) {
    Cochain f = flowerCochain(middle, copy);
    CHECK(isCocycle(middle, f));
    someBad = someBad || !findCoboundaryPreimage(middle, f).has_value();
  }
  CHECK(someBad);
}
