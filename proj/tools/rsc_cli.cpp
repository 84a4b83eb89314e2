// Command-line front end: sampling, experiments, scans and self-checks.
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsc/cohomology.hpp"
#include "rsc/experiments.hpp"
#include "rsc/obstructions.hpp"
#include "rsc/process.hpp"
#include "rsc/thresholds.hpp"
#include "rsc/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidConfig = 2;

struct Options {
  rsc::ExperimentConfig config;
  std::string model = "g";
  std::optional<double> p;
  std::string out;
  std::string csv;
  std::string trace;
  std::string complexFile;
};

/// Writes to the named file, or stdout when the name is empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void writeCsvIfRequested(const std::string& path, auto const& summary) {
  if (path.empty()) return;
  Sink sink(path);
  rsc::writeCsv(sink.stream(), summary);
}

nlohmann::ordered_json hittingJson(const rsc::HittingTime& h) {
  switch (h.kind) {
    case rsc::HittingKind::At:
      return {{"kind", "at"}, {"event", h.event}, {"time", h.time}, {"rank", h.rank}};
    case rsc::HittingKind::NeverExisted:
      return {{"kind", "never_existed"}};
    case rsc::HittingKind::Persists:
      return {{"kind", "persists"}};
  }
  return nullptr;
}

int runScan(const Options& o) {
  const auto& c = o.config;
  rsc::BirthTimeTable table = rsc::sampleBirthTimes(c.n, c.k, c.seed);
  rsc::ScanResult scan = rsc::scanProcess(table, c.j, c.model, {.recordTrace = !o.trace.empty()});
  if (!o.trace.empty()) {
    Sink sink(o.trace);
    rsc::writeTraceCsv(sink.stream(), table, scan);
  }
  nlohmann::ordered_json j{{"schema_version", rsc::kSchemaVersion}, {"kind", "scan"}};
  j["config"] = {{"n", c.n}, {"k", c.k}, {"j", c.j}, {"model", rsc::toString(c.model)}, {"seed", c.seed}};
  j["events"] = scan.events;
  const rsc::HittingTimes& h = scan.hitting;
  if (c.model == rsc::Model::G) {
    j["p_t"] = hittingJson(h.pT);
    j["p_mj"] = hittingJson(h.pMj);
    j["p_mjminus"] = hittingJson(h.pMjMinus);
    nlohmann::ordered_json conn = nlohmann::ordered_json::array();
    for (const auto& t : h.pConn) conn.push_back(hittingJson(t));
    j["p_conn"] = conn;
    rsc::HittingChecks checks = rsc::checkHittingEquality(scan);
    j["conn_equals_mj"] = checks.connEqualsMj;
    j["subcritical"] = checks.subcritical;
  } else {
    j["p_isol"] = hittingJson(h.pIsol);
    j["p_conn_y"] = hittingJson(h.pConnY);
    j["conn_equals_isol"] = h.pConnY == h.pIsol;
  }
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  return 0;
}

int runSampleCommand(const Options& o) {
  if (o.complexFile.empty()) {
    rsc::SampleReport report = rsc::runSample(o.config);
    Sink sink(o.out);
    rsc::writeJson(sink.stream(), report);
    return 0;
  }
  rsc::Complex c = rsc::readComplexFile(o.complexFile);
  const int j = o.config.j;
  rsc::CohomologySummary s = rsc::summarize(c);
  nlohmann::ordered_json out{{"schema_version", rsc::kSchemaVersion}, {"kind", "sample"}};
  out["config"] = {{"n", c.n()}, {"k", c.k()}, {"j", j}, {"model", rsc::toString(c.model())}, {"file", o.complexFile}};
  out["f_vector"] = s.fVector;
  out["bettis"] = s.bettis;
  out["components"] = rsc::componentCount(c);
  out["mjminus_count"] = rsc::countMjMinus(c, j);
  out["mj_count"] = rsc::countMjPairs(c, j);
  out["local_obstacles"] = rsc::findLocalObstacles(c, j).size();
  if (c.model() == rsc::Model::Y) out["isolated_count"] = rsc::findIsolated(c).size();
  out["connected"] = rsc::isJCohomConnected(c, j);
  Sink sink(o.out);
  sink.stream() << out.dump(2) << '\n';
  return 0;
}

int runExpect(const Options& o) {
  const auto& c = o.config;
  rsc::Thresholds t = rsc::thresholds(c.n, c.k, c.j);
  const double p = o.p ? *o.p : t.pj;
  nlohmann::ordered_json j{{"schema_version", rsc::kSchemaVersion}, {"kind", "expect"}};
  j["config"] = {{"n", c.n}, {"k", c.k}, {"j", c.j}, {"c", c.c}, {"p", p}};
  j["p0"] = t.p0;
  j["p0_minus"] = t.p0Minus;
  j["pj"] = t.pj;
  j["pj_minus"] = t.pjMinus;
  j["pj_one"] = t.pjOne;
  j["pj_bar"] = t.pjBar;
  j["lambda"] = t.lambda(c.c);
  j["window_p"] = rsc::windowProbability(c.n, c.k, c.j, c.c);
  j["prob_connected_limit"] = std::exp(-t.lambda(c.c));
  j["expected_mjminus"] = rsc::expectedMjMinus(c.n, c.k, c.j, p);
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  return 0;
}

int runVerify(const Options& o) {
  rsc::VerifyReport report = rsc::runVerifySuite(o.config.seed);
  Sink sink(o.out);
  for (const auto& check : report.checks)
    sink.stream() << (check.passed ? "PASS " : "FAIL ") << check.name << (check.detail.empty() ? "" : ": ")
                  << check.detail << '\n';
  return report.allPassed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random simplicial complexes: cohomology thresholds, obstructions and hitting times"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read option defaults from a TOML/INI file; flags override");

  Options o;
  auto& c = o.config;
  app.add_option("--n", c.n, "Number of vertices")->capture_default_str();
  app.add_option("--k", c.k, "Dimension of the complex")->capture_default_str();
  app.add_option("--j", c.j, "Cohomology dimension, 1 <= j <= k-1")->capture_default_str();
  app.add_option("--c", c.c, "Offset in the critical window")->capture_default_str();
  app.add_option("--p", o.p, "Probability; overrides the window or shell probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("--trials", c.trials, "Number of trials")->capture_default_str();
  app.add_option("--seed", c.seed, "Master seed")->capture_default_str();
  app.add_option("--model", o.model, "g or y")->check(CLI::IsMember({"g", "y", "G", "Y"}))->capture_default_str();
  app.add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--n-list", c.nList, "List of n for hitting and shell experiments")->delimiter(',');
  app.add_option("--samples", c.samples, "Sets B per n in the shell experiment")->capture_default_str();
  app.add_option("--out", o.out, "Summary output path (default: stdout)");
  app.add_option("--csv", o.csv, "Per-trial CSV output path");
  app.add_option("--trace", o.trace, "Per-event trace CSV path (scan)");
  app.add_option("--complex-file", o.complexFile, "Summarize this complex instead of sampling (sample)");

  auto* sample = app.add_subcommand("sample", "Sample one complex and summarize it as JSON");
  auto* window = app.add_subcommand("window", "Critical-window experiment");
  auto* hitting = app.add_subcommand("hitting", "Hitting-time experiment over full process scans");
  auto* shells = app.add_subcommand("shells", "Count j-shells through random (j+1)-sets");
  auto* scan = app.add_subcommand("scan", "Scan one process and report hitting times");
  auto* verify = app.add_subcommand("verify", "Run the exhaustive small-case checks");
  auto* expect = app.add_subcommand("expect", "Evaluate threshold formulas and expectations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidConfig;
  }

  try {
    c.model = rsc::parseModel(o.model);
    c.p = o.p;
    if (sample->parsed()) return runSampleCommand(o);
    if (window->parsed()) {
      rsc::WindowSummary s = rsc::runWindowExperiment(c);
      Sink sink(o.out);
      rsc::writeJson(sink.stream(), s);
      writeCsvIfRequested(o.csv, s);
      return 0;
    }
    if (hitting->parsed()) {
      rsc::HittingSummary s = rsc::runHittingExperiment(c);
      Sink sink(o.out);
      rsc::writeJson(sink.stream(), s);
      writeCsvIfRequested(o.csv, s);
      return 0;
    }
    if (shells->parsed()) {
      rsc::ShellSummary s = rsc::runShellCheck(c);
      Sink sink(o.out);
      rsc::writeJson(sink.stream(), s);
      writeCsvIfRequested(o.csv, s);
      return 0;
    }
    if (scan->parsed()) return runScan(o);
    if (verify->parsed()) return runVerify(o);
    if (expect->parsed()) return runExpect(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return kExitInvalidConfig;
}
