#include "rsc/verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "rsc/cohomology.hpp"
#include "rsc/obstructions.hpp"
#include "rsc/process.hpp"
#include "rsc/sampling.hpp"

namespace rsc {

bool VerifyReport::allPassed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

Complex randomComplex(int n, int k, double p, Rng& rng) {
  std::vector<Simplex> tops;
  for (SimplexRank r : sampleBernoulliRanks(binomial(n, k + 1), p, rng)) tops.push_back(Simplex::fromRank(r, k + 1));
  return buildG(n, k, std::move(tops));
}

/// Facet masks of the (j+1)-simplices, over the indices of the j-simplices.
std::vector<uint64_t> cofaceMasks(const Complex& c, int j) {
  std::vector<uint64_t> masks;
  if (j + 1 > c.k()) return masks;
  const SimplexIndex& faces = c.simplices(j);
  const SimplexIndex& cofaces = c.simplices(j + 1);
  for (size_t i = 0; i < cofaces.size(); ++i) {
    uint64_t mask = 0;
    forEachFacet(cofaces.simplexAt(i), [&](const Simplex& f, Vertex) { mask |= uint64_t{1} << *faces.indexOf(f); });
    masks.push_back(mask);
  }
  return masks;
}

/// log2(#cocycles / #coboundaries) by listing every j-cochain and every
/// (j-1)-cochain; needs f_j <= 22.
size_t exhaustiveBetti(const Complex& c, int j) {
  const size_t fj = c.count(j);
  std::vector<uint64_t> masks = cofaceMasks(c, j);
  size_t cocycles = 0;
  for (uint64_t f = 0; f < (uint64_t{1} << fj); ++f)
    if (std::all_of(masks.begin(), masks.end(), [&](uint64_t m) { return std::popcount(f & m) % 2 == 0; })) ++cocycles;
  std::vector<uint8_t> image(uint64_t{1} << fj, 0);
  size_t coboundaries = 1;
  image[0] = 1;
  if (j > 0) {
    // Column of d^{j-1} for each (j-1)-simplex, as a mask over j-simplices.
    std::vector<uint64_t> columns(c.count(j - 1), 0);
    std::vector<uint64_t> rows = cofaceMasks(c, j - 1);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t col = 0; col < columns.size(); ++col)
        if ((rows[r] >> col) & 1) columns[col] |= uint64_t{1} << r;
    uint64_t value = 0;
    for (uint64_t g = 1; g < (uint64_t{1} << columns.size()); ++g) {
      value ^= columns[std::countr_zero(g)];
      if (!image[value]) {
        image[value] = 1;
        ++coboundaries;
      }
    }
  }
  return static_cast<size_t>(std::bit_width(cocycles / coboundaries) - 1);
}

VerifyCheck nonmonotoneFixture() {
  VerifyCheck check{"nonmonotone-fixture", true, ""};
  std::ostringstream why;
  const std::vector<Simplex> events = {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}, {0, 2, 3}};
  std::vector<Complex> steps;
  for (size_t count : {2u, 3u, 4u})
    steps.push_back(buildG(5, 2, std::vector<Simplex>(events.begin(), events.begin() + count)));
  for (size_t i = 0; i < steps.size(); ++i) {
    size_t expected = i == 1 ? 1 : 0;
    if (betti(steps[i], 1) != expected) why << "betti_1 of step " << i << " is " << betti(steps[i], 1) << "; ";
  }
  if (findMjMinus(steps[0], 1).empty()) why << "first step has no M_1^- copy; ";
  if (!findMj(steps[0], 1).empty()) why << "first step has an M_1 copy; ";
  if (findMj(steps[1], 1).empty()) why << "second step has no M_1 copy; ";
  if (!findMj(steps[2], 1).empty()) why << "third step has an M_1 copy; ";

  BirthTimeTable table = birthTimesFromOrder(5, 2, events);
  ScanResult scan = scanProcess(table, 1, Model::G, {.recordTrace = true});
  if (!(scan.trace[1].connected && !scan.trace[2].connected && scan.trace[3].connected))
    why << "scan does not flip connected, not connected, connected at events 2-4; ";
  check.detail = why.str();
  check.passed = check.detail.empty();
  return check;
}

VerifyCheck bettiAgainstEnumeration(Rng& rng) {
  VerifyCheck check{"betti-matches-exhaustive-count", true, ""};
  size_t complexes = 0;
  for (int n : {5, 6})
    for (int i = 0; i < 20; ++i) {
      Complex c = randomComplex(n, 2, 0.1 + 0.04 * i, rng);
      ++complexes;
      for (int j = 0; j <= 2; ++j)
        if (betti(c, j) != exhaustiveBetti(c, j)) {
          check.passed = false;
          check.detail = "mismatch at n=" + std::to_string(n) + ", j=" + std::to_string(j);
        }
    }
  if (check.passed) check.detail = std::to_string(complexes) + " complexes";
  return check;
}

VerifyCheck structuralIdentities(Rng& rng) {
  VerifyCheck check{"structural-identities", true, ""};
  for (int n : {5, 6, 7})
    for (int i = 0; i < 10; ++i) {
      Complex c = randomComplex(n, 3, 0.05 + 0.05 * i, rng);
      CohomologySummary s = summarize(c);
      long euler = 0, bettiSum = 0;
      for (int d = 0; d <= c.k(); ++d) {
        euler += (d % 2 ? -1 : 1) * static_cast<long>(s.fVector[d]);
        bettiSum += (d % 2 ? -1 : 1) * static_cast<long>(s.bettis[d]);
      }
      bool ok = euler == bettiSum && s.bettis[0] == componentCount(c);
      for (int j = 0; j + 1 < c.k(); ++j) {
        Gf2Matrix first = coboundaryMatrix(c, j), second = coboundaryMatrix(c, j + 1);
        for (size_t col = 0; col < first.cols() && ok; ++col)
          ok = !second.multiply(first.column(col)).any();
      }
      if (!ok) {
        check.passed = false;
        check.detail = "identity fails at n=" + std::to_string(n);
      }
    }
  return check;
}

VerifyCheck expansionBound() {
  VerifyCheck check{"coboundary-expansion-bound", true, ""};
  size_t cochains = 0;
  for (int n : {5, 6}) {
    const uint64_t edges = binomial(n, 2);
    for (uint64_t f = 0; f < (uint64_t{1} << edges); ++f) {
      std::vector<Simplex> support;
      for (uint64_t e = 0; e < edges; ++e)
        if ((f >> e) & 1) support.push_back(Simplex::fromRank(e, 2));
      ++cochains;
      if (!meshulamWallachCheck(n, 1, support).holds) {
        check.passed = false;
        check.detail = "violated at n=" + std::to_string(n);
        return check;
      }
    }
  }
  check.detail = std::to_string(cochains) + " cochains";
  return check;
}

VerifyCheck cocycleSupportsAreFlowers(Rng& rng) {
  VerifyCheck check{"cocycle-support-flowers", true, ""};
  size_t supports = 0;
  for (int n : {5, 6, 7})
    for (int i = 0; i < 6; ++i) {
      Complex c = randomComplex(n, 2, 0.1 + 0.05 * i, rng);
      const int j = 1;
      for (const auto& support : enumerateTraversableCocycleSupports(c, j, 4).supports) {
        ++supports;
        for (const Simplex& top : c.topSimplices()) {
          std::vector<Simplex> inside;
          for (const Simplex& s : support)
            if (s.isSubsetOf(top)) inside.push_back(s);
          if (inside.empty()) continue;
          Simplex covered;
          for (const Simplex& s : inside) covered = setUnion(covered, s);
          bool ok = static_cast<int>(inside.size()) >= c.k() - j + 1 && covered == top;
          if (ok && static_cast<int>(inside.size()) == c.k() - j + 1) {
            Simplex centre = inside[0];
            for (const Simplex& s : inside) centre = setDifference(centre, setDifference(centre, s));
            ok = centre.size() == j;
          }
          if (!ok) {
            check.passed = false;
            check.detail = "support restriction to {" + top.toString(1) + "} is not a flower";
          }
        }
      }
    }
  if (check.passed) check.detail = std::to_string(supports) + " supports";
  return check;
}

VerifyCheck smallestSupportTraversable(Rng& rng) {
  VerifyCheck check{"smallest-support-traversable", true, ""};
  size_t tested = 0;
  // An annulus: H^1 = F2 and no flower has private petals.
  std::vector<Complex> complexes = {
      buildG(6, 2, {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}})};
  for (int n : {6, 7})
    for (int i = 0; i < 30; ++i) complexes.push_back(randomComplex(n, 2, 0.15 + 0.01 * i, rng));
  for (const Complex& c : complexes) {
    const int n = c.n();
    const int j = 1;
    const SimplexIndex& faces = c.simplices(j);
    std::vector<Gf2Vector> cocycles = nullspaceBasis(coboundaryMatrix(c, j));
    EchelonBasis generated(faces.size());
    Gf2Matrix lower = coboundaryMatrix(c, j - 1);
    for (size_t col = 0; col < lower.cols(); ++col) generated.insert(lower.column(col));
    for (const MjMinusCopy& copy : findMjMinus(c, j)) generated.insert(flowerCochain(c, copy).values);
    if (cocycles.size() > 20) continue;

    size_t best = SIZE_MAX;
    std::vector<Gf2Vector> smallest;
    Gf2Vector f(faces.size());
    for (uint64_t g = 1; g < (uint64_t{1} << cocycles.size()); ++g) {
      f ^= cocycles[std::countr_zero(g)];
      if (generated.contains(f)) continue;
      size_t weight = f.count();
      if (weight < best) {
        best = weight;
        smallest.clear();
      }
      if (weight == best) smallest.push_back(f);
    }
    for (const Gf2Vector& s : smallest) {
      ++tested;
      std::vector<Simplex> support;
      for (size_t idx : s.support()) support.push_back(faces.simplexAt(idx));
      if (!isTraversable(c, support)) {
        check.passed = false;
        check.detail = "a smallest support is not traversable at n=" + std::to_string(n);
      }
    }
  }
  if (check.passed) check.detail = std::to_string(tested) + " smallest supports";
  return check;
}

VerifyCheck detectorChecks(Rng& rng) {
  VerifyCheck check{"detector-chain", true, ""};
  std::ostringstream why;
  for (int n : {5, 6, 7})
    for (int i = 0; i < 10; ++i) {
      Complex c = randomComplex(n, 2, 0.08 + 0.04 * i, rng);
      const int j = 1;
      std::vector<MjMinusCopy> minus = findMjMinus(c, j);
      std::vector<MjCopy> mj = findMj(c, j);
      std::vector<LocalObstacle> obstacles = findLocalObstacles(c, j);
      for (const MjStarCopy& star : findMjStar(c, j)) {
        Simplex petal = star.base.flower.petalAt(star.w);
        bool found = std::any_of(mj.begin(), mj.end(),
                                 [&](const MjCopy& m) { return m.base == star.base && m.petal == petal; });
        if (!found) why << "M* copy without M copy; ";
      }
      for (const MjCopy& m : mj) {
        if (std::find(minus.begin(), minus.end(), m.base) == minus.end()) why << "M copy without M^- copy; ";
        Cochain flower = flowerCochain(c, m.base);
        if (!isCocycle(c, flower) || findCoboundaryPreimage(c, flower)) why << "flower cochain is not bad; ";
      }
      for (const MjMinusCopy& m : minus)
        if (std::none_of(obstacles.begin(), obstacles.end(), [&](const LocalObstacle& o) { return o.top == m.flower.top; }))
          why << "M^- top is not a local obstacle; ";
    }
  check.detail = why.str();
  check.passed = check.detail.empty();
  return check;
}

}  // namespace

VerifyReport runVerifySuite(uint64_t seed) {
  Rng rng(seed);
  VerifyReport report;
  report.checks.push_back(nonmonotoneFixture());
  report.checks.push_back(bettiAgainstEnumeration(rng));
  report.checks.push_back(structuralIdentities(rng));
  report.checks.push_back(expansionBound());
  report.checks.push_back(cocycleSupportsAreFlowers(rng));
  report.checks.push_back(smallestSupportTraversable(rng));
  report.checks.push_back(detectorChecks(rng));
  return report;
}

}  // namespace rsc
