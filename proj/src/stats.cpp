#include "rsc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsc {

std::vector<double> empiricalPmf(std::span<const size_t> values) {
  if (values.empty()) return {};
  std::vector<double> pmf(*std::max_element(values.begin(), values.end()) + 1, 0.0);
  for (size_t v : values) pmf[v] += 1;
  for (double& p : pmf) p /= static_cast<double>(values.size());
  return pmf;
}

double poissonPmf(size_t x, double lambda) {
  if (lambda < 0) throw std::invalid_argument("Poisson mean must be nonnegative");
  if (lambda == 0) return x == 0 ? 1.0 : 0.0;
  double xd = static_cast<double>(x);
  return std::exp(xd * std::log(lambda) - lambda - std::lgamma(xd + 1));
}

double totalVariationToPoisson(std::span<const double> pmf, double lambda) {
  double sum = 0;
  double covered = 0;
  for (size_t x = 0; x < pmf.size(); ++x) {
    double q = poissonPmf(x, lambda);
    covered += q;
    sum += std::abs(pmf[x] - q);
  }
  return 0.5 * (sum + std::max(0.0, 1.0 - covered));
}

ChiSquare pooledChiSquare(std::span<const size_t> values, double lambda, double minExpected) {
  ChiSquare out;
  if (values.empty()) return out;
  const double total = static_cast<double>(values.size());
  const size_t top = *std::max_element(values.begin(), values.end());
  // Last cell is the upper tail beyond the largest observed value.
  std::vector<double> observed(top + 2, 0.0), expected(top + 2, 0.0);
  for (size_t v : values) observed[v] += 1;
  double mass = 0;
  for (size_t x = 0; x <= top; ++x) {
    expected[x] = total * poissonPmf(x, lambda);
    mass += expected[x];
  }
  expected[top + 1] = std::max(0.0, total - mass);
  // Merge from the right until every cell is large enough.
  while (expected.size() > 1 && expected.back() < minExpected) {
    double e = expected.back(), o = observed.back();
    expected.pop_back();
    observed.pop_back();
    expected.back() += e;
    observed.back() += o;
  }
  for (size_t x = 0; x < expected.size(); ++x)
    if (expected[x] > 0) out.statistic += (observed[x] - expected[x]) * (observed[x] - expected[x]) / expected[x];
  out.degreesOfFreedom = static_cast<int>(expected.size()) - 1;
  return out;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  if (!(q >= 0 && q <= 1)) throw std::invalid_argument("quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  double h = q * static_cast<double>(values.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(h));
  size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

SampleSummary describe(std::span<const double> values) {
  SampleSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.standardError = std::sqrt(ss / static_cast<double>(s.count - 1) / static_cast<double>(s.count));
  }
  std::vector<double> copy(values.begin(), values.end());
  s.median = quantile(copy, 0.5);
  s.q1 = quantile(copy, 0.25);
  s.q3 = quantile(copy, 0.75);
  return s;
}

LinearFit fitLine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fitLine needs two or more paired points");
  const double count = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fitLine needs two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double residual = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double e = y[i] - (fit.intercept + fit.slope * x[i]);
    residual += e * e;
  }
  fit.rSquared = syy == 0 ? (residual == 0 ? 1.0 : 0.0) : 1.0 - residual / syy;
  return fit;
}

}  // namespace rsc
