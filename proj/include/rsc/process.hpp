#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rsc/complex.hpp"

namespace rsc {

/// A birth time for every (k+1)-subset of [n], indexed by colex rank, and
/// the induced event order. Times are pairwise distinct.
struct BirthTimeTable {
  int n = 0;
  int k = 0;
  std::vector<double> times;
  std::vector<SimplexRank> order;

  size_t eventCount() const { return order.size(); }
  double eventTime(size_t i) const { return times[order[i]]; }
  Simplex eventSimplex(size_t i) const { return Simplex::fromRank(order[i], k + 1); }
};

/// Times are (u + 1) 2^-53 for 53-bit integers u drawn in colex order from
/// one stream seeded by `seed`; equal draws are ordered by rank and nudged
/// apart to the next representable double.
BirthTimeTable sampleBirthTimes(int n, int k, uint64_t seed);

/// Table whose first events are `leading` in the given order, followed by
/// every other (k+1)-set in colex order. Event i has time (i + 1) / (m + 1).
BirthTimeTable birthTimesFromOrder(int n, int k, std::span<const Simplex> leading);

/// The complex generated by the sets born at or before p.
Complex complexAt(const BirthTimeTable& t, double p, Model model = Model::G);

/// The complex generated by the first `events` events.
Complex complexAfterEvents(const BirthTimeTable& t, size_t events, Model model = Model::G);

enum class HittingKind {
  At,            // the property fails for the last time just before `event`
  NeverExisted,  // the property never fails
  Persists,      // the property still fails at p = 1
};

/// The sup over p of the times at which a property fails. With the state
/// after s events written G_s, if s* is the last failing state and s* < m
/// the hitting time is the birth time of event s* (0-based).
struct HittingTime {
  HittingKind kind = HittingKind::NeverExisted;
  size_t event = 0;
  double time = 0.0;
  SimplexRank rank = 0;

  friend bool operator==(const HittingTime&, const HittingTime&) = default;
};

struct HittingTimes {
  HittingTime pT;        // not topologically connected
  HittingTime pMj;       // contains M_j
  HittingTime pMjMinus;  // contains M_j^-
  std::vector<HittingTime> pConn;  // pConn[i - 1]: not i-cohom-connected, i = 1..j
  HittingTime pIsol;     // Y model: contains an isolated (k-1)-simplex
  HittingTime pConnY;    // Y model: H^{k-1} != 0
};

struct TraceRow {
  SimplexRank eventRank = 0;
  double birthTime = 0.0;
  size_t components = 0;
  std::vector<size_t> betti;  // G: betti_1..betti_j; Y: betti_{k-1}
  size_t mjMinus = 0;
  size_t mj = 0;
  size_t localObstacles = 0;
  size_t isolated = 0;
  bool connected = false;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct ScanOptions {
  bool recordTrace = false;
};

struct ScanResult {
  Model model = Model::G;
  int j = 1;
  size_t events = 0;
  HittingTimes hitting;
  /// First state (number of events) that is j-cohom-connected; events + 1
  /// if none is.
  size_t firstConnectedState = 0;
  /// One row per event, describing the state right after it.
  std::vector<TraceRow> trace;
};

/// Runs the process in birth order. The G scan tracks components, betti
/// numbers 1..j, M_j^-, M_j and local obstacles for the given j; the Y scan
/// always works in dimension k - 1 and tracks isolated (k-1)-simplices.
///
/// Betti numbers are maintained by one echelon basis of boundaries per
/// dimension. A flower with private petals is a cocycle, so an M_j copy
/// needs both an M_j^- copy and H^j != 0; M_j is only evaluated, from a
/// snapshot, in states meeting both conditions.
ScanResult scanProcess(const BirthTimeTable& t, int j, Model model, const ScanOptions& options = {});

struct HittingChecks {
  bool connEqualsMj = false;    // pConn(j) and pMj are the same event
  bool subcritical = false;     // not j-cohom-connected at every state before pMj
  bool connEqualsIsol = false;  // Y model: pConnY and pIsol are the same event
  bool mjMinusEqualsMj = false;
};

/// `g` must come from a G scan; `y` (optional) from a Y scan of the same table.
HittingChecks checkHittingEquality(const ScanResult& g, const ScanResult* y = nullptr);

void writeTraceCsv(std::ostream& out, const BirthTimeTable& t, const ScanResult& scan);

}  // namespace rsc
