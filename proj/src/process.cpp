#include "rsc/process.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "rsc/gf2.hpp"
#include "rsc/obstructions.hpp"
#include "rsc/sampling.hpp"
#include "rsc/union_find.hpp"

namespace rsc {

namespace {

constexpr uint64_t kMaxEvents = uint64_t{1} << 31;

uint64_t eventCountFor(int n, int k) {
  if (k < 2 || k + 1 > 16) throw std::invalid_argument("k must lie in [2, 15]");
  if (n < k + 1) throw std::invalid_argument("need n >= k + 1");
  uint64_t m = binomial(n, k + 1);
  if (m > kMaxEvents) throw std::invalid_argument("C(n, k+1) exceeds the size envelope");
  return m;
}

class LastFailure {
 public:
  void record(size_t state, bool failing) {
    if (failing) {
      any_ = true;
      state_ = state;
    }
  }
  HittingTime finish(const BirthTimeTable& t) const {
    HittingTime h;
    if (!any_) return h;
    if (state_ == t.eventCount()) {
      h.kind = HittingKind::Persists;
      return h;
    }
    h.kind = HittingKind::At;
    h.event = state_;
    h.time = t.eventTime(state_);
    h.rank = t.order[state_];
    return h;
  }

 private:
  bool any_ = false;
  size_t state_ = 0;
};

Gf2Vector boundaryVector(const Simplex& s, uint64_t length) {
  Gf2Vector v(length);
  forEachFacet(s, [&](const Simplex& facet, Vertex) { v.set(facet.rank()); });
  return v;
}

bool hasMj(const Complex& c, int j) { return countMjPairs(c, j) > 0; }

ScanResult scanG(const BirthTimeTable& t, int j, const ScanOptions& options) {
  const int n = t.n;
  const int k = t.k;
  if (j < 1 || j > k - 1) throw std::out_of_range("j must lie in [1, k-1]");
  const size_t m = t.eventCount();

  ScanResult result;
  result.model = Model::G;
  result.j = j;
  result.events = m;

  std::vector<std::vector<uint8_t>> present(k + 1);
  std::vector<uint64_t> total(k + 1), count(k + 1, 0);
  for (int d = 1; d <= k; ++d) {
    total[d] = binomial(n, d + 1);
    present[d].assign(total[d], 0);
  }
  UnionFind uf(n);
  std::vector<EchelonBasis> boundaries;
  for (int d = 0; d <= j + 1; ++d) boundaries.emplace_back(d >= 2 ? binomial(n, d) : 0);

  std::vector<uint32_t> degree(total[j], 0);
  std::vector<SimplexRank> ownerXor(total[j], 0);
  std::vector<uint16_t> mjMinusOf(m, 0);
  std::vector<uint8_t> obstacleOf(m, 0);
  size_t mjMinusTotal = 0, obstacleTotal = 0;

  auto evaluateTop = [&](SimplexRank rank) {
    Simplex top = Simplex::fromRank(rank, k + 1);
    int flowers = 0;
    forEachSubset(top, j, [&](const Simplex& centre) {
      for (Vertex w : top)
        if (!centre.contains(w) && degree[centre.with(w).rank()] != 1) return;
      ++flowers;
    });
    int privateFaces = 0;
    forEachSubset(top, j + 1, [&](const Simplex& f) { privateFaces += degree[f.rank()] == 1; });
    mjMinusOf[rank] = static_cast<uint16_t>(flowers);
    obstacleOf[rank] = privateFaces >= k - j + 1;
  };

  std::vector<size_t> betti(j + 1, 0);
  bool frozen = false;
  LastFailure notConnectedT, mjMinus;
  std::vector<LastFailure> notConnected(j);
  std::vector<uint8_t> candidate(m + 1, 0);
  result.firstConnectedState = m + 1;

  auto recordState = [&](size_t s) {
    betti[0] = uf.components();
    notConnectedT.record(s, betti[0] != 1);
    bool connected = betti[0] == 1;
    for (int i = 1; i <= j; ++i) {
      connected = connected && betti[i] == 0;
      notConnected[i - 1].record(s, !connected);
    }
    if (connected && result.firstConnectedState > m) result.firstConnectedState = s;
    mjMinus.record(s, mjMinusTotal > 0);
    candidate[s] = mjMinusTotal > 0 && betti[j] > 0;
    return connected;
  };
  recordState(0);

  std::vector<SimplexRank> affected;
  for (size_t s = 0; s < m; ++s) {
    const SimplexRank topRank = t.order[s];
    const Simplex top = Simplex::fromRank(topRank, k + 1);
    for (int d = 1; d <= k; ++d) {
      forEachSubset(top, d + 1, [&](const Simplex& f) {
        SimplexRank r = f.rank();
        if (present[d][r]) return;
        present[d][r] = 1;
        ++count[d];
        if (d == 1)
          uf.unite(f[0], f[1]);
        else if (d <= j + 1 && !frozen)
          boundaries[d].insert(boundaryVector(f, binomial(n, d)));
      });
    }

    affected.assign(1, topRank);
    forEachSubset(top, j + 1, [&](const Simplex& f) {
      SimplexRank r = f.rank();
      if (degree[r] == 1) affected.push_back(ownerXor[r]);
      ++degree[r];
      ownerXor[r] ^= topRank;
    });
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (SimplexRank r : affected) {
      mjMinusTotal -= mjMinusOf[r];
      obstacleTotal -= obstacleOf[r];
      evaluateTop(r);
      mjMinusTotal += mjMinusOf[r];
      obstacleTotal += obstacleOf[r];
    }

    if (!frozen) {
      const size_t components = uf.components();
      for (int i = 1; i <= j; ++i) {
        size_t rankBelow = i == 1 ? n - components : boundaries[i].rank();
        betti[i] = count[i] - rankBelow - boundaries[i + 1].rank();
      }
      frozen = count[j] == total[j] && components == 1 &&
               std::all_of(betti.begin() + 1, betti.end(), [](size_t b) { return b == 0; });
    }
    bool connected = recordState(s + 1);

    if (options.recordTrace) {
      TraceRow row;
      row.eventRank = topRank;
      row.birthTime = t.eventTime(s);
      row.components = uf.components();
      row.betti.assign(betti.begin() + 1, betti.end());
      row.mjMinus = mjMinusTotal;
      row.localObstacles = obstacleTotal;
      row.connected = connected;
      result.trace.push_back(std::move(row));
    }
  }

  // M_j only in states with an M_j^- copy and H^j != 0.
  LastFailure mj;
  for (size_t s = m + 1; s-- > 0;) {
    if (candidate[s] && hasMj(complexAfterEvents(t, s), j)) {
      mj.record(s, true);
      break;
    }
  }
  if (options.recordTrace)
    for (size_t s = 1; s <= m; ++s)
      if (candidate[s]) result.trace[s - 1].mj = countMjPairs(complexAfterEvents(t, s), j);

  result.hitting.pT = notConnectedT.finish(t);
  result.hitting.pMj = mj.finish(t);
  result.hitting.pMjMinus = mjMinus.finish(t);
  for (const LastFailure& f : notConnected) result.hitting.pConn.push_back(f.finish(t));
  return result;
}

ScanResult scanY(const BirthTimeTable& t, const ScanOptions& options) {
  const int n = t.n;
  const int k = t.k;
  const size_t m = t.eventCount();
  ScanResult result;
  result.model = Model::Y;
  result.j = k - 1;
  result.events = m;

  const uint64_t ridges = binomial(n, k);
  const size_t cycleRank = binomial(n - 1, k);  // f_{k-1} - rank of the full skeleton's boundary
  EchelonBasis boundaries(ridges);
  std::vector<uint32_t> degree(ridges, 0);
  size_t isolated = ridges;
  size_t bettiTop = cycleRank;

  LastFailure isolatedPresent, notConnected;
  result.firstConnectedState = m + 1;
  auto recordState = [&](size_t s) {
    isolatedPresent.record(s, isolated > 0);
    notConnected.record(s, bettiTop > 0);
    if (bettiTop == 0 && result.firstConnectedState > m) result.firstConnectedState = s;
  };
  recordState(0);

  for (size_t s = 0; s < m; ++s) {
    const Simplex top = t.eventSimplex(s);
    forEachFacet(top, [&](const Simplex& facet, Vertex) {
      if (degree[facet.rank()]++ == 0) --isolated;
    });
    if (bettiTop > 0 && boundaries.insert(boundaryVector(top, ridges))) --bettiTop;
    recordState(s + 1);
    if (options.recordTrace) {
      TraceRow row;
      row.eventRank = t.order[s];
      row.birthTime = t.eventTime(s);
      row.components = 1;
      row.betti = {bettiTop};
      row.isolated = isolated;
      row.connected = bettiTop == 0;
      result.trace.push_back(std::move(row));
    }
  }
  result.hitting.pIsol = isolatedPresent.finish(t);
  result.hitting.pConnY = notConnected.finish(t);
  return result;
}

}  // namespace

BirthTimeTable sampleBirthTimes(int n, int k, uint64_t seed) {
  const uint64_t m = eventCountFor(n, k);
  BirthTimeTable t;
  t.n = n;
  t.k = k;
  std::vector<uint64_t> draws(m);
  Rng rng(seed);
  for (uint64_t r = 0; r < m; ++r) draws[r] = rng() >> 11;
  t.order.resize(m);
  std::iota(t.order.begin(), t.order.end(), SimplexRank{0});
  std::sort(t.order.begin(), t.order.end(), [&](SimplexRank a, SimplexRank b) {
    return draws[a] != draws[b] ? draws[a] < draws[b] : a < b;
  });
  t.times.resize(m);
  double previous = 0.0;
  for (SimplexRank r : t.order) {
    double time = static_cast<double>(draws[r] + 1) * 0x1.0p-53;
    if (time <= previous) time = std::nextafter(previous, 2.0);
    t.times[r] = time;
    previous = time;
  }
  return t;
}

BirthTimeTable birthTimesFromOrder(int n, int k, std::span<const Simplex> leading) {
  const uint64_t m = eventCountFor(n, k);
  BirthTimeTable t;
  t.n = n;
  t.k = k;
  std::vector<uint8_t> used(m, 0);
  for (const Simplex& s : leading) {
    if (s.size() != k + 1 || s.maxVertex() >= n) throw std::invalid_argument("leading event is not a (k+1)-subset of [n]");
    SimplexRank r = s.rank();
    if (used[r]) throw std::invalid_argument("leading events repeat {" + s.toString(1) + "}");
    used[r] = 1;
    t.order.push_back(r);
  }
  for (SimplexRank r = 0; r < m; ++r)
    if (!used[r]) t.order.push_back(r);
  t.times.resize(m);
  for (size_t i = 0; i < m; ++i) t.times[t.order[i]] = static_cast<double>(i + 1) / static_cast<double>(m + 1);
  return t;
}

Complex complexAfterEvents(const BirthTimeTable& t, size_t events, Model model) {
  events = std::min(events, t.eventCount());
  std::vector<Simplex> tops;
  tops.reserve(events);
  for (size_t i = 0; i < events; ++i) tops.push_back(t.eventSimplex(i));
  return build(model, t.n, t.k, std::move(tops));
}

Complex complexAt(const BirthTimeTable& t, double p, Model model) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  size_t events = 0;
  while (events < t.eventCount() && t.eventTime(events) <= p) ++events;
  return complexAfterEvents(t, events, model);
}

ScanResult scanProcess(const BirthTimeTable& t, int j, Model model, const ScanOptions& options) {
  return model == Model::G ? scanG(t, j, options) : scanY(t, options);
}

HittingChecks checkHittingEquality(const ScanResult& g, const ScanResult* y) {
  if (g.model != Model::G) throw std::invalid_argument("checkHittingEquality needs a G-model scan");
  HittingChecks checks;
  const HittingTime& pMj = g.hitting.pMj;
  checks.connEqualsMj = g.hitting.pConn.back() == pMj;
  checks.subcritical = pMj.kind == HittingKind::At && g.firstConnectedState > pMj.event;
  checks.mjMinusEqualsMj = g.hitting.pMjMinus == pMj;
  if (y) {
    if (y->model != Model::Y) throw std::invalid_argument("second scan must use the Y model");
    checks.connEqualsIsol = y->hitting.pConnY == y->hitting.pIsol;
  }
  return checks;
}

void writeTraceCsv(std::ostream& out, const BirthTimeTable& t, const ScanResult& scan) {
  char buf[64];
  if (scan.model == Model::G) {
    out << "event_rank,birth_time,num_components";
    for (int i = 1; i <= scan.j; ++i) out << ",betti_" << i;
    out << ",mjminus_count,mj_count,local_obstacles,connected_" << scan.j << '\n';
  } else {
    out << "event_rank,birth_time,num_components,betti_" << t.k - 1 << ",isolated_count,connected\n";
  }
  for (const TraceRow& row : scan.trace) {
    std::snprintf(buf, sizeof buf, "%.17g", row.birthTime);
    out << row.eventRank << ',' << buf << ',' << row.components;
    for (size_t b : row.betti) out << ',' << b;
    if (scan.model == Model::G)
      out << ',' << row.mjMinus << ',' << row.mj << ',' << row.localObstacles;
    else
      out << ',' << row.isolated;
    out << ',' << (row.connected ? 1 : 0) << '\n';
  }
}

}  // namespace rsc
