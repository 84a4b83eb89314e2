#pragma once

namespace rsc {

/// Edge probabilities of the (n, k, j) probability ladder, natural logs.
struct Thresholds {
  int n = 0;
  int k = 0;
  int j = 0;
  double p0 = 0;
  double p0Minus = 0;
  double pj = 0;
  double pjMinus = 0;
  double pjOne = 0;
  double pjBar = 0;

  double lambda(double c) const;
};

/// Throws std::invalid_argument for n < 3 or j outside [1, k-1].
Thresholds thresholds(int n, int k, int j);

/// Poisson mean of dim H^j in the critical window with offset c.
double lambdaJ(int k, int j, double c);

/// ((j+1) ln n + ln ln n + c) (k-j)! / ((k-j+1) n^{k-j}).
double windowProbability(int n, int k, int j, double c);

/// Inverse of windowProbability in c.
double normalizedOffset(int n, int k, int j, double p);

/// Expected number of M_j^- copies (K, C) in G_p.
double expectedMjMinus(int n, int k, int j, double p);

}  // namespace rsc
