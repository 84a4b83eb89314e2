#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <sstream>

#include "rsc/cohomology.hpp"
#include "rsc/obstructions.hpp"
#include "rsc/process.hpp"

using namespace rsc;

namespace {

/// Last state (number of events) at which `failing` holds, by rebuilding
/// every snapshot from scratch.
template <typename Pred>
HittingTime referenceHitting(const BirthTimeTable& t, Model model, Pred failing) {
  std::optional<size_t> last;
  for (size_t s = 0; s <= t.eventCount(); ++s)
    if (failing(complexAfterEvents(t, s, model))) last = s;
  HittingTime h;
  if (!last) return h;
  if (*last == t.eventCount()) {
    h.kind = HittingKind::Persists;
    return h;
  }
  h.kind = HittingKind::At;
  h.event = *last;
  h.time = t.eventTime(*last);
  h.rank = t.order[*last];
  return h;
}

}  // namespace

TEST_CASE("birth-time tables") {
  BirthTimeTable a = sampleBirthTimes(10, 2, 99), b = sampleBirthTimes(10, 2, 99);
  CHECK(a.times == b.times);
  CHECK(a.order == b.order);
  CHECK(a.eventCount() == 120);
  for (size_t i = 1; i < a.eventCount(); ++i) CHECK(a.eventTime(i - 1) < a.eventTime(i));
  std::vector<SimplexRank> sorted = a.order;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
  for (double t : a.times) CHECK((t > 0 && t <= 1));
  CHECK(sampleBirthTimes(3, 2, 1).eventCount() == 1);
  CHECK(sampleBirthTimes(10, 2, 98).times != a.times);
  CHECK_THROWS_AS(sampleBirthTimes(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(sampleBirthTimes(4000, 3, 1), std::invalid_argument);
}

TEST_CASE("snapshots are monotone and count events") {
  BirthTimeTable t = sampleBirthTimes(7, 2, 5);
  CHECK(complexAt(t, 0.0).topSimplices().empty());
  CHECK(complexAt(t, 1.0).topSimplices().size() == 35);
  for (size_t i = 0; i < t.eventCount(); ++i) {
    Complex c = complexAt(t, t.eventTime(i));
    CHECK(c.topSimplices().size() == i + 1);
    if (i > 0) {
      Complex before = complexAt(t, t.eventTime(i - 1));
      for (const Simplex& s : before.topSimplices()) CHECK(c.contains(s));
    }
  }
  CHECK_THROWS_AS(complexAt(t, 1.5), std::invalid_argument);
}

TEST_CASE("prescribed order places the leading events first") {
  std::vector<Simplex> leading = {{0, 1, 2}, {0, 3, 4}};
  BirthTimeTable t = birthTimesFromOrder(5, 2, leading);
  CHECK(t.eventSimplex(0) == leading[0]);
  CHECK(t.eventSimplex(1) == leading[1]);
  CHECK(t.eventCount() == 10);
  CHECK_THROWS_AS(birthTimesFromOrder(5, 2, std::vector<Simplex>{{0, 1, 2}, {0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("scan trace on the three-step fixture flips connectedness") {
  std::vector<Simplex> leading = {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}, {0, 2, 3}};
  BirthTimeTable t = birthTimesFromOrder(5, 2, leading);
  ScanResult scan = scanProcess(t, 1, Model::G, {.recordTrace = true});
  REQUIRE(scan.trace.size() == 10);
  CHECK_FALSE(scan.trace[0].connected);
  CHECK(scan.trace[1].connected);
  CHECK_FALSE(scan.trace[2].connected);
  CHECK(scan.trace[3].connected);
  CHECK(scan.trace[2].betti == std::vector<size_t>{1});
  CHECK(scan.trace[2].mj > 0);
  CHECK(scan.trace[1].mj == 0);
  CHECK(scan.trace[1].mjMinus > 0);
  std::ostringstream csv;
  writeTraceCsv(csv, t, scan);
  CHECK(csv.str().rfind("event_rank,birth_time,num_components,betti_1,mjminus_count,mj_count,local_obstacles,connected_1\n", 0) == 0);
}

TEST_CASE("single-event process") {
  BirthTimeTable t = sampleBirthTimes(3, 2, 4);
  ScanResult scan = scanProcess(t, 1, Model::G);
  CHECK(scan.hitting.pT.kind == HittingKind::At);
  CHECK(scan.hitting.pT.time == t.eventTime(0));
  CHECK(scan.hitting.pMj.kind == HittingKind::NeverExisted);
  ScanResult y = scanProcess(t, 1, Model::Y);
  CHECK(y.hitting.pIsol.kind == HittingKind::At);
  CHECK(y.hitting.pConnY.kind == HittingKind::At);
}

TEST_CASE("scan trace agrees with snapshots rebuilt from scratch") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3), k = seed % 4 == 0 ? 3 : 2;
    BirthTimeTable t = sampleBirthTimes(n, k, seed);
    for (int j = 1; j < k; ++j) {
      ScanResult scan = scanProcess(t, j, Model::G, {.recordTrace = true});
      for (size_t s = 0; s < t.eventCount(); ++s) {
        Complex c = complexAfterEvents(t, s + 1);
        const TraceRow& row = scan.trace[s];
        CHECK(row.components == componentCount(c));
        for (int i = 1; i <= j; ++i) CHECK(row.betti[i - 1] == betti(c, i));
        CHECK(row.mjMinus == countMjMinus(c, j));
        CHECK(row.mj == countMjPairs(c, j));
        CHECK(row.localObstacles == findLocalObstacles(c, j).size());
        CHECK(row.connected == isJCohomConnected(c, j));
      }
      CHECK(scan.hitting.pT == referenceHitting(t, Model::G, [](const Complex& c) { return componentCount(c) != 1; }));
      CHECK(scan.hitting.pMj == referenceHitting(t, Model::G, [&](const Complex& c) { return !findMj(c, j).empty(); }));
      CHECK(scan.hitting.pMjMinus ==
            referenceHitting(t, Model::G, [&](const Complex& c) { return countMjMinus(c, j) > 0; }));
      CHECK(scan.hitting.pConn[j - 1] ==
            referenceHitting(t, Model::G, [&](const Complex& c) { return !isJCohomConnected(c, j); }));
    }
    ScanResult y = scanProcess(t, k - 1, Model::Y, {.recordTrace = true});
    for (size_t s = 0; s < t.eventCount(); ++s) {
      Complex c = complexAfterEvents(t, s + 1, Model::Y);
      CHECK(y.trace[s].isolated == findIsolated(c).size());
      CHECK(y.trace[s].betti[0] == betti(c, k - 1));
    }
    CHECK(y.hitting.pIsol == referenceHitting(t, Model::Y, [](const Complex& c) { return !findIsolated(c).empty(); }));
    CHECK(y.hitting.pConnY == referenceHitting(t, Model::Y, [&](const Complex& c) { return betti(c, k - 1) != 0; }));
  }
}

TEST_CASE("hitting-time invariants over many processes") {
  for (uint64_t seed = 100; seed < 160; ++seed) {
    BirthTimeTable t = sampleBirthTimes(9, 2, seed);
    ScanResult g = scanProcess(t, 1, Model::G);
    ScanResult y = scanProcess(t, 1, Model::Y);
    const HittingTimes& h = g.hitting;
    REQUIRE(h.pT.kind == HittingKind::At);
    REQUIRE(h.pConn[0].kind == HittingKind::At);
    CHECK(h.pT.time <= h.pConn[0].time);
    CHECK(g.firstConnectedState > h.pT.event);
    HittingChecks checks = checkHittingEquality(g, &y);
    CHECK(checks.connEqualsIsol == (y.hitting.pConnY == y.hitting.pIsol));
    // Isolated ridges force H^{k-1} != 0 in the Y model.
    if (y.hitting.pIsol.kind == HittingKind::At && y.hitting.pConnY.kind == HittingKind::At)
      CHECK(y.hitting.pIsol.event <= y.hitting.pConnY.event);
  }
}

TEST_CASE("scans are deterministic") {
  BirthTimeTable t = sampleBirthTimes(12, 2, 77);
  ScanResult a = scanProcess(t, 1, Model::G, {.recordTrace = true});
  ScanResult b = scanProcess(t, 1, Model::G, {.recordTrace = true});
  CHECK(a.trace == b.trace);
  std::ostringstream x, y;
  writeTraceCsv(x, t, a);
  writeTraceCsv(y, t, b);
  CHECK(x.str() == y.str());
}
