#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/flower.hpp"
#include "rsc/gf2.hpp"

namespace rsc {

/// A 0-1 function on the j-simplices of a complex, indexed like
/// simplices(j).
struct Cochain {
  int dimension = 0;
  Gf2Vector values;
};

/// Throws std::invalid_argument if an entry of `support` is not a j-simplex.
Cochain makeCochain(const Complex& c, int j, std::span<const Simplex> support);
Cochain zeroCochain(const Complex& c, int j);
std::vector<Simplex> supportOf(const Complex& c, const Cochain& f);

/// Matrix of the coboundary map from j-cochains to (j+1)-cochains: rows are
/// (j+1)-simplices, columns j-simplices. j = -1 gives the f_0 x 0 matrix of
/// the map from the zero group; j = k gives the 0 x f_k matrix.
Gf2Matrix coboundaryMatrix(const Complex& c, int j);

/// Matrix of the boundary map from j-chains to (j-1)-chains: the transpose
/// of coboundaryMatrix(c, j - 1).
Gf2Matrix boundaryMatrix(const Complex& c, int j);

size_t coboundaryRank(const Complex& c, int j);

/// dim H^j(c; F2) = (f_j - rank d^j) - rank d^{j-1}, by dense elimination.
size_t betti(const Complex& c, int j);

/// dim H^1(c; F2) by sparse propagation: cochains are pinned to zero on a
/// spanning forest of the 1-skeleton and the triangle equations are peeled.
size_t firstCohomologyDimension(const Complex& c);

/// betti(c, j), using the sparse route for j = 1.
size_t cohomologyDimension(const Complex& c, int j);

/// Connected components of the vertex set, by union-find over the edges.
size_t componentCount(const Complex& c);

/// H^0 = F2 and H^i = 0 for 1 <= i <= j.
bool isJCohomConnected(const Complex& c, int j);

bool isCocycle(const Complex& c, const Cochain& f);

/// Some g with d^{j-1} g = f, or nullopt when f is not a coboundary. For
/// j = 0 only the zero cochain is a coboundary (preimage of dimension -1).
std::optional<Cochain> findCoboundaryPreimage(const Complex& c, const Cochain& f);

/// The cochain whose support is the flower's petal set.
Cochain flowerCochain(const Complex& c, const MjMinusCopy& copy);

/// Whether the cocycle f is cohomologous to a sum of flower cochains of the
/// given copies. Throws std::invalid_argument if f is not a cocycle.
bool isGeneratedByMjMinus(const Complex& c, const Cochain& f, std::span<const MjMinusCopy> copies);

struct CohomologySummary {
  std::vector<size_t> fVector;  // f_0 .. f_k
  std::vector<size_t> bettis;   // b_0 .. b_k
};

enum class RankMethod { Dense, Sparse };

/// f-vector and all Betti numbers. The sparse method uses union-find for
/// b_0, propagation for b_1 and the Euler characteristic for b_k; it is
/// intended for large k = 2 complexes.
CohomologySummary summarize(const Complex& c, RankMethod method = RankMethod::Dense);

}  // namespace rsc
