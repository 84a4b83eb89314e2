#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rsc/cohomology.hpp"
#include "rsc/complex.hpp"
#include "rsc/flower.hpp"

namespace rsc {

/// (K, C, w, a): an M_j^- copy whose base petal C + {w} spans a j-shell
/// C + {w, a} with apex a outside K.
struct MjStarCopy {
  MjMinusCopy base;
  Vertex w = 0;
  Vertex apex = 0;
  Simplex shell() const { return base.flower.centre.with(w).with(apex); }
};

/// (K, C, J): J is a j-cycle whose intersection with the flower is exactly
/// the distinguished petal.
struct MjCopy {
  MjMinusCopy base;
  Simplex petal;
  std::vector<Simplex> cycle;
};

/// A k-simplex with at least k - j + 1 faces of dimension j that lie in no
/// other k-simplex.
struct LocalObstacle {
  Simplex top;
  std::vector<Simplex> privateFaces;
};

struct ShellQuery {
  std::vector<Vertex> apexes;
  size_t count() const { return apexes.size(); }
};

struct TraversableSupports {
  std::vector<std::vector<Simplex>> supports;
  bool truncated = false;
  size_t nodesVisited = 0;
};

struct MeshulamWallachResult {
  size_t w = 0;
  size_t b = 0;
  bool holds = true;
};

std::vector<MjMinusCopy> findMjMinus(const Complex& c, int j);
size_t countMjMinus(const Complex& c, int j);

std::vector<MjStarCopy> findMjStar(const Complex& c, int j);

/// All (K, C, P, J) with (K, C) an M_j^- copy and J a j-cycle meeting the
/// flower only in the petal P.
///
/// For each copy the flower cochain is tested against the coboundary space
/// first: if it is a coboundary it vanishes on every cycle, so no J exists.
/// Otherwise each petal is tested by asking whether its boundary lies in the
/// span of the boundaries of all j-simplices except the flower; the solver's
/// witness plus P is the reported cycle.
std::vector<MjCopy> findMj(const Complex& c, int j);

/// Number of M_j^- copies (K, C) whose flower cochain is not a coboundary.
/// Such a copy admits a cycle through each of its petals: a cycle meeting
/// the flower in an odd number of petals can be corrected two petals at a
/// time by boundaries of (j+1)-faces of K.
size_t countMjPairs(const Complex& c, int j);

std::vector<LocalObstacle> findLocalObstacles(const Complex& c, int j);

/// Apexes a outside B such that B + {a} is a j-shell in c + B.
ShellQuery countShellsThrough(const Complex& c, const Simplex& b);

/// All (j+1)-subsets of A are simplices and A itself is not.
bool isHollowShell(const Complex& c, const Simplex& a);

/// (k-1)-simplices contained in no k-simplex. Y model only.
std::vector<Simplex> findIsolated(const Complex& c);

/// Whether S is connected under "lies in a common k-simplex".
bool isTraversable(const Complex& c, std::span<const Simplex> s);

/// Every traversable support S (|S| <= maxSize) of a nonzero j-cocycle,
/// found by growing supports from a seed through the k-simplices containing
/// their members. Each support is reported once, colex-sorted. Stops and
/// sets `truncated` after `nodeBudget` partial supports.
TraversableSupports enumerateTraversableCocycleSupports(const Complex& c, int j, size_t maxSize,
                                                        size_t nodeBudget = 1'000'000);

/// Brute-force check of b(f) >= w(f) n / (j + 2) on the complete complex on
/// n vertices. `support` lists j-simplices of that complex. Throws
/// std::invalid_argument outside the exhaustive envelope
/// (C(n, j) <= 24 and C(n, j + 1) <= 64).
MeshulamWallachResult meshulamWallachCheck(int n, int j, std::span<const Simplex> support);

}  // namespace rsc
