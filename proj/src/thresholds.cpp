#include "rsc/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace rsc {

namespace {

double factorial(int m) {
  double f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

double choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

void requireLadder(int n, int k, int j) {
  if (n < 3) throw std::invalid_argument("thresholds need n >= 3");
  if (k < 2) throw std::invalid_argument("thresholds need k >= 2");
  if (j < 1 || j > k - 1) throw std::invalid_argument("j must lie in [1, k-1]");
}

/// (k-j)! / ((k-j+1) n^{k-j})
double scale(int n, int k, int j) { return factorial(k - j) / ((k - j + 1) * std::pow(n, k - j)); }

}  // namespace

double Thresholds::lambda(double c) const { return lambdaJ(k, j, c); }

Thresholds thresholds(int n, int k, int j) {
  requireLadder(n, k, j);
  const double ln = std::log(static_cast<double>(n));
  const double lnln = std::log(ln);
  Thresholds t;
  t.n = n;
  t.k = k;
  t.j = j;
  t.p0 = ln / std::pow(n, k) * factorial(k);
  t.p0Minus = ln / std::pow(n, k);
  t.pj = ((j + 1) * ln + lnln) * scale(n, k, j);
  t.pjMinus = (1 - 1 / std::sqrt(ln)) * (j + 1) * ln * scale(n, k, j);
  t.pjOne = 1 / (10 * (j + 1) * choose(k + 1, j + 1) * std::pow(n, k - j));
  t.pjBar = ((j + 1) * ln + 0.5 * lnln) * scale(n, k, j);
  return t;
}

double lambdaJ(int k, int j, double c) {
  if (j < 1 || j > k - 1) throw std::invalid_argument("j must lie in [1, k-1]");
  const double spread = k - j + 1;
  return (j + 1) * std::exp(-c) / (spread * spread * factorial(j));
}

double windowProbability(int n, int k, int j, double c) {
  requireLadder(n, k, j);
  const double ln = std::log(static_cast<double>(n));
  return ((j + 1) * ln + std::log(ln) + c) * scale(n, k, j);
}

double normalizedOffset(int n, int k, int j, double p) {
  requireLadder(n, k, j);
  const double ln = std::log(static_cast<double>(n));
  return p / scale(n, k, j) - (j + 1) * ln - std::log(ln);
}

double expectedMjMinus(int n, int k, int j, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (j < 1 || j > k - 1 || n < k + 1) throw std::invalid_argument("need 1 <= j <= k-1 and n >= k+1");
  // (k+1)-sets other than K that contain the centre and meet K minus the centre.
  const double exponent = choose(n - j, k + 1 - j) - choose(n - k - 1, k + 1 - j) - 1;
  return choose(n, k + 1) * choose(k + 1, j) * p * std::pow(1 - p, exponent);
}

}  // namespace rsc
