#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rsc {

/// Relative frequencies indexed by value; empty for empty input.
std::vector<double> empiricalPmf(std::span<const size_t> values);

double poissonPmf(size_t x, double lambda);

/// Total variation distance between `pmf` and Poisson(lambda), counting the
/// Poisson mass beyond the support of `pmf`.
double totalVariationToPoisson(std::span<const double> pmf, double lambda);

struct ChiSquare {
  double statistic = 0;
  int degreesOfFreedom = 0;
};

/// Pearson statistic against Poisson(lambda); cells are merged from the
/// right until each expected count reaches `minExpected`, and the last
/// cell holds the whole upper tail.
ChiSquare pooledChiSquare(std::span<const size_t> values, double lambda, double minExpected = 5.0);

/// Linear-interpolation quantile (the usual "type 7").
double quantile(std::vector<double> values, double q);

struct SampleSummary {
  size_t count = 0;
  double mean = 0;
  double standardError = 0;
  double median = 0;
  double q1 = 0;
  double q3 = 0;
  double iqr() const { return q3 - q1; }
};

SampleSummary describe(std::span<const double> values);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double rSquared = 0;
};

/// Least squares; rSquared is 1 when y is constant and exactly fitted.
LinearFit fitLine(std::span<const double> x, std::span<const double> y);

}  // namespace rsc
