#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/process.hpp"
#include "rsc/stats.hpp"

namespace rsc {

inline constexpr int kSchemaVersion = 1;

struct ExperimentConfig {
  int n = 100;
  int k = 2;
  int j = 1;
  Model model = Model::G;
  double c = 0.0;
  std::optional<double> p;  // overrides the window / shell probability
  size_t trials = 100;
  uint64_t seed = 1;
  unsigned workers = 1;
  std::vector<int> nList;  // hitting and shell experiments
  size_t samples = 50;     // shell experiment: sets B per n
};

/// Runs fn(trial) for every trial on `workers` threads and returns the
/// results in trial order.
template <typename T, typename Fn>
std::vector<T> runTrials(size_t trials, unsigned workers, Fn&& fn);

struct WindowTrial {
  size_t cohomology = 0;  // dim H^j
  size_t mjMinus = 0;     // number of M_j^- copies
  bool connected = false;
};

struct WindowSummary {
  ExperimentConfig config;
  double p = 0;
  double lambda = 0;
  std::vector<WindowTrial> records;
  std::vector<double> pmf;
  std::vector<double> poisson;
  double totalVariation = 0;
  ChiSquare chiSquare;
  double probConnected = 0;
  double identityRate = 0;  // dim H^j equals the M_j^- count
  double meanMjMinus = 0;
  double standardErrorMjMinus = 0;
  double expectedMjMinus = 0;
};

/// Samples G_p (or Y_p) directly in the critical window for j and records
/// dim H^j, the M_j^- count and j-cohom-connectedness per trial.
WindowSummary runWindowExperiment(const ExperimentConfig& config);

struct HittingTrial {
  HittingTimes g;
  HittingTimes y;
  HittingChecks checks;
  std::optional<double> normalized;  // offset c of pMj, when pMj is an event
};

struct HittingRow {
  int n = 0;
  std::vector<HittingTrial> records;
  double connEqualsMj = 0;
  double subcritical = 0;
  double mjMinusEqualsMj = 0;
  double connEqualsIsol = 0;
  SampleSummary normalized;
};

struct HittingSummary {
  ExperimentConfig config;
  std::vector<HittingRow> rows;
};

/// Full G and Y scans of one birth-time table per trial, for each n in
/// config.nList (or config.n alone).
HittingSummary runHittingExperiment(const ExperimentConfig& config);

struct ShellRow {
  int n = 0;
  double p = 0;
  std::vector<size_t> counts;
  size_t minimum = 0;
  double median = 0;
  double gammaHat = 0;  // minimum / n
};

struct ShellSummary {
  ExperimentConfig config;
  std::vector<ShellRow> rows;
  std::optional<LinearFit> minimumFit;  // minimum count against n
};

/// For each n, samples one G_p (p = pjOne unless overridden) and counts the
/// j-shells through `samples` random (j+1)-sets B in G_p + B.
ShellSummary runShellCheck(const ExperimentConfig& config);

/// Summary of one sampled complex.
struct SampleReport {
  ExperimentConfig config;
  double p = 0;
  std::vector<size_t> fVector;
  std::vector<size_t> bettis;
  size_t components = 0;
  size_t mjMinus = 0;
  size_t mj = 0;
  size_t localObstacles = 0;
  size_t isolated = 0;
  bool connected = false;
};

SampleReport runSample(const ExperimentConfig& config);

/// One sampled complex per (config, trial), used by the window experiment.
Complex sampleComplex(const ExperimentConfig& config, double p, size_t trial);

void writeJson(std::ostream& out, const WindowSummary& s);
void writeJson(std::ostream& out, const HittingSummary& s);
void writeJson(std::ostream& out, const ShellSummary& s);
void writeJson(std::ostream& out, const SampleReport& s);
void writeCsv(std::ostream& out, const WindowSummary& s);
void writeCsv(std::ostream& out, const HittingSummary& s);
void writeCsv(std::ostream& out, const ShellSummary& s);

}  // namespace rsc

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace rsc {

template <typename T, typename Fn>
std::vector<T> runTrials(size_t trials, unsigned workers, Fn&& fn) {
  std::vector<T> results(trials);
  if (workers <= 1 || trials <= 1) {
    for (size_t t = 0; t < trials; ++t) results[t] = fn(t);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureLock;
  auto work = [&] {
    for (size_t t; (t = next.fetch_add(1)) < trials;) {
      try {
        results[t] = fn(t);
      } catch (...) {
        std::lock_guard lock(failureLock);
        if (!failure) failure = std::current_exception();
        next = trials;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<size_t>(workers, trials); ++w) pool.emplace_back(work);
  for (auto& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace rsc
