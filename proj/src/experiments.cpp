#include "rsc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "rsc/cohomology.hpp"
#include "rsc/obstructions.hpp"
#include "rsc/sampling.hpp"
#include "rsc/thresholds.hpp"

namespace rsc {

using Json = nlohmann::ordered_json;

namespace {

void validate(const ExperimentConfig& config) {
  if (config.k < 2) throw std::invalid_argument("k must be at least 2");
  if (config.j < 1 || config.j > config.k - 1) throw std::invalid_argument("j must lie in [1, k-1]");
  if (config.n < config.k + 1) throw std::invalid_argument("need n >= k + 1");
  if (config.p && !(*config.p >= 0.0 && *config.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  for (int n : config.nList)
    if (n < config.k + 1) throw std::invalid_argument("every n in the list must be at least k + 1");
}

std::vector<int> sizes(const ExperimentConfig& config) {
  return config.nList.empty() ? std::vector<int>{config.n} : config.nList;
}

double windowP(const ExperimentConfig& config) {
  if (config.p) return *config.p;
  return std::clamp(windowProbability(config.n, config.k, config.j, config.c), 0.0, 1.0);
}

std::string formatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* kindName(HittingKind kind) {
  switch (kind) {
    case HittingKind::At: return "at";
    case HittingKind::NeverExisted: return "never_existed";
    case HittingKind::Persists: return "persists";
  }
  return "?";
}

std::string csvTime(const HittingTime& h) { return h.kind == HittingKind::At ? formatDouble(h.time) : kindName(h.kind); }

Json configJson(const ExperimentConfig& c) {
  Json j{{"n", c.n}, {"k", c.k}, {"j", c.j}, {"model", toString(c.model)}, {"c", c.c}};
  j["p"] = c.p ? Json(*c.p) : Json(nullptr);
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  if (!c.nList.empty()) j["n_list"] = c.nList;
  return j;
}

Json header(const char* kind, const ExperimentConfig& c) {
  return Json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"config", configJson(c)}};
}

Json summaryJson(const SampleSummary& s) {
  if (s.count == 0) return Json{{"count", 0}};
  return Json{{"count", s.count}, {"mean", s.mean}, {"standard_error", s.standardError},
              {"median", s.median}, {"q1", s.q1}, {"q3", s.q3}, {"iqr", s.iqr()}};
}

}  // namespace

Complex sampleComplex(const ExperimentConfig& config, double p, size_t trial) {
  const uint64_t total = binomial(config.n, config.k + 1);
  if (total > (uint64_t{1} << 31)) throw std::invalid_argument("C(n, k+1) exceeds the size envelope");
  Rng rng(trialSeed(config.seed, trial));
  std::vector<SimplexRank> ranks = sampleBernoulliRanks(total, p, rng);
  std::vector<Simplex> tops;
  tops.reserve(ranks.size());
  for (SimplexRank r : ranks) tops.push_back(Simplex::fromRank(r, config.k + 1));
  return build(config.model, config.n, config.k, std::move(tops));
}

WindowSummary runWindowExperiment(const ExperimentConfig& config) {
  validate(config);
  WindowSummary s;
  s.config = config;
  s.p = windowP(config);
  s.lambda = lambdaJ(config.k, config.j, config.c);
  s.expectedMjMinus = expectedMjMinus(config.n, config.k, config.j, s.p);
  s.records = runTrials<WindowTrial>(config.trials, config.workers, [&](size_t trial) {
    Complex c = sampleComplex(config, s.p, trial);
    WindowTrial r;
    r.cohomology = cohomologyDimension(c, config.j);
    r.mjMinus = countMjMinus(c, config.j);
    r.connected = componentCount(c) == 1;
    for (int i = 1; i <= config.j && r.connected; ++i)
      r.connected = (i == config.j ? r.cohomology : cohomologyDimension(c, i)) == 0;
    return r;
  });
  if (s.records.empty()) return s;

  std::vector<size_t> dims;
  std::vector<double> counts;
  size_t connected = 0, identical = 0;
  for (const WindowTrial& r : s.records) {
    dims.push_back(r.cohomology);
    counts.push_back(static_cast<double>(r.mjMinus));
    connected += r.connected;
    identical += r.cohomology == r.mjMinus;
  }
  const double trials = static_cast<double>(s.records.size());
  s.pmf = empiricalPmf(dims);
  for (size_t x = 0; x < s.pmf.size(); ++x) s.poisson.push_back(poissonPmf(x, s.lambda));
  s.totalVariation = totalVariationToPoisson(s.pmf, s.lambda);
  s.chiSquare = pooledChiSquare(dims, s.lambda);
  s.probConnected = connected / trials;
  s.identityRate = identical / trials;
  SampleSummary mjMinus = describe(counts);
  s.meanMjMinus = mjMinus.mean;
  s.standardErrorMjMinus = mjMinus.standardError;
  return s;
}

HittingSummary runHittingExperiment(const ExperimentConfig& config) {
  validate(config);
  HittingSummary summary;
  summary.config = config;
  for (int n : sizes(config)) {
    HittingRow row;
    row.n = n;
    const uint64_t master = trialSeed(config.seed, static_cast<uint64_t>(n));
    row.records = runTrials<HittingTrial>(config.trials, config.workers, [&](size_t trial) {
      BirthTimeTable table = sampleBirthTimes(n, config.k, trialSeed(master, trial));
      ScanResult g = scanProcess(table, config.j, Model::G);
      ScanResult y = scanProcess(table, config.j, Model::Y);
      HittingTrial r;
      r.checks = checkHittingEquality(g, &y);
      r.g = std::move(g.hitting);
      r.y = std::move(y.hitting);
      if (r.g.pMj.kind == HittingKind::At && n >= 3) r.normalized = normalizedOffset(n, config.k, config.j, r.g.pMj.time);
      return r;
    });
    std::vector<double> normalized;
    for (const HittingTrial& r : row.records) {
      row.connEqualsMj += r.checks.connEqualsMj;
      row.subcritical += r.checks.subcritical;
      row.mjMinusEqualsMj += r.checks.mjMinusEqualsMj;
      row.connEqualsIsol += r.checks.connEqualsIsol;
      if (r.normalized) normalized.push_back(*r.normalized);
    }
    if (!row.records.empty()) {
      const double trials = static_cast<double>(row.records.size());
      row.connEqualsMj /= trials;
      row.subcritical /= trials;
      row.mjMinusEqualsMj /= trials;
      row.connEqualsIsol /= trials;
    }
    row.normalized = describe(normalized);
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

ShellSummary runShellCheck(const ExperimentConfig& config) {
  validate(config);
  ShellSummary summary;
  summary.config = config;
  for (int n : sizes(config)) {
    ExperimentConfig local = config;
    local.n = n;
    local.model = Model::G;
    local.seed = trialSeed(config.seed, static_cast<uint64_t>(n));
    ShellRow row;
    row.n = n;
    row.p = config.p ? *config.p : thresholds(n, config.k, config.j).pjOne;
    Complex c = sampleComplex(local, row.p, 0);
    Rng rng(trialSeed(local.seed, 1));
    std::vector<Vertex> vertices(n);
    for (int v = 0; v < n; ++v) vertices[v] = v;
    std::vector<Simplex> bases;
    for (size_t i = 0; i < config.samples; ++i) {
      // Partial Fisher-Yates: the first j+1 entries form a uniform (j+1)-set.
      for (int a = 0; a <= config.j; ++a) {
        uint64_t b = a + rng() % static_cast<uint64_t>(n - a);
        std::swap(vertices[a], vertices[b]);
      }
      bases.emplace_back(std::span<const Vertex>(vertices.data(), config.j + 1));
    }
    row.counts = runTrials<size_t>(bases.size(), config.workers,
                                   [&](size_t i) { return countShellsThrough(c, bases[i]).count(); });
    if (!row.counts.empty()) {
      row.minimum = *std::min_element(row.counts.begin(), row.counts.end());
      std::vector<double> asDouble(row.counts.begin(), row.counts.end());
      row.median = quantile(asDouble, 0.5);
      row.gammaHat = static_cast<double>(row.minimum) / n;
    }
    summary.rows.push_back(std::move(row));
  }
  if (summary.rows.size() >= 2) {
    std::vector<double> x, y;
    for (const ShellRow& r : summary.rows) {
      x.push_back(r.n);
      y.push_back(static_cast<double>(r.minimum));
    }
    bool distinct = std::any_of(x.begin(), x.end(), [&](double v) { return v != x.front(); });
    if (distinct) summary.minimumFit = fitLine(x, y);
  }
  return summary;
}

SampleReport runSample(const ExperimentConfig& config) {
  validate(config);
  SampleReport r;
  r.config = config;
  r.p = windowP(config);
  Complex c = sampleComplex(config, r.p, 0);
  CohomologySummary s = summarize(c, config.k == 2 ? RankMethod::Sparse : RankMethod::Dense);
  r.fVector = s.fVector;
  r.bettis = s.bettis;
  r.components = componentCount(c);
  r.mjMinus = countMjMinus(c, config.j);
  r.mj = countMjPairs(c, config.j);
  r.localObstacles = findLocalObstacles(c, config.j).size();
  if (config.model == Model::Y) r.isolated = findIsolated(c).size();
  r.connected = isJCohomConnected(c, config.j);
  return r;
}

void writeJson(std::ostream& out, const WindowSummary& s) {
  Json j = header("window", s.config);
  j["p"] = s.p;
  j["lambda"] = s.lambda;
  j["trials"] = s.records.size();
  j["pmf"] = s.pmf;
  j["poisson_pmf"] = s.poisson;
  j["total_variation"] = s.totalVariation;
  j["chi_square"] = {{"statistic", s.chiSquare.statistic}, {"degrees_of_freedom", s.chiSquare.degreesOfFreedom}};
  j["prob_connected"] = s.probConnected;
  j["prob_connected_limit"] = std::exp(-s.lambda);
  j["identity_rate"] = s.identityRate;
  j["mjminus_mean"] = s.meanMjMinus;
  j["mjminus_standard_error"] = s.standardErrorMjMinus;
  j["mjminus_expected"] = s.expectedMjMinus;
  out << j.dump(2) << '\n';
}

void writeJson(std::ostream& out, const HittingSummary& s) {
  Json j = header("hitting", s.config);
  Json rows = Json::array();
  for (const HittingRow& r : s.rows)
    rows.push_back({{"n", r.n},
                    {"trials", r.records.size()},
                    {"conn_equals_mj", r.connEqualsMj},
                    {"subcritical", r.subcritical},
                    {"mjminus_equals_mj", r.mjMinusEqualsMj},
                    {"conn_equals_isol", r.connEqualsIsol},
                    {"normalized_pmj", summaryJson(r.normalized)}});
  j["rows"] = rows;
  out << j.dump(2) << '\n';
}

void writeJson(std::ostream& out, const ShellSummary& s) {
  Json j = header("shells", s.config);
  Json rows = Json::array();
  for (const ShellRow& r : s.rows)
    rows.push_back({{"n", r.n}, {"p", r.p}, {"samples", r.counts.size()}, {"minimum", r.minimum},
                    {"median", r.median}, {"gamma_hat", r.gammaHat}});
  j["rows"] = rows;
  if (s.minimumFit)
    j["minimum_fit"] = {{"slope", s.minimumFit->slope}, {"intercept", s.minimumFit->intercept},
                        {"r_squared", s.minimumFit->rSquared}};
  else
    j["minimum_fit"] = nullptr;
  out << j.dump(2) << '\n';
}

void writeJson(std::ostream& out, const SampleReport& r) {
  Json j = header("sample", r.config);
  j["p"] = r.p;
  j["f_vector"] = r.fVector;
  j["bettis"] = r.bettis;
  j["components"] = r.components;
  j["mjminus_count"] = r.mjMinus;
  j["mj_count"] = r.mj;
  j["local_obstacles"] = r.localObstacles;
  if (r.config.model == Model::Y) j["isolated_count"] = r.isolated;
  j["connected"] = r.connected;
  out << j.dump(2) << '\n';
}

void writeCsv(std::ostream& out, const WindowSummary& s) {
  out << "trial,cohomology,mjminus_count,connected\n";
  for (size_t t = 0; t < s.records.size(); ++t) {
    const WindowTrial& r = s.records[t];
    out << t << ',' << r.cohomology << ',' << r.mjMinus << ',' << (r.connected ? 1 : 0) << '\n';
  }
}

void writeCsv(std::ostream& out, const HittingSummary& s) {
  out << "n,trial,p_t,p_mj,p_mjminus,p_conn,p_isol,p_conn_y,conn_equals_mj,subcritical,mjminus_equals_mj,"
         "conn_equals_isol,normalized_pmj\n";
  for (const HittingRow& row : s.rows)
    for (size_t t = 0; t < row.records.size(); ++t) {
      const HittingTrial& r = row.records[t];
      out << row.n << ',' << t << ',' << csvTime(r.g.pT) << ',' << csvTime(r.g.pMj) << ',' << csvTime(r.g.pMjMinus)
          << ',' << csvTime(r.g.pConn.back()) << ',' << csvTime(r.y.pIsol) << ',' << csvTime(r.y.pConnY) << ','
          << r.checks.connEqualsMj << ',' << r.checks.subcritical << ',' << r.checks.mjMinusEqualsMj << ','
          << r.checks.connEqualsIsol << ',' << (r.normalized ? formatDouble(*r.normalized) : "") << '\n';
    }
}

void writeCsv(std::ostream& out, const ShellSummary& s) {
  out << "n,p,sample,count\n";
  for (const ShellRow& row : s.rows)
    for (size_t i = 0; i < row.counts.size(); ++i)
      out << row.n << ',' << formatDouble(row.p) << ',' << i << ',' << row.counts[i] << '\n';
}

}  // namespace rsc
