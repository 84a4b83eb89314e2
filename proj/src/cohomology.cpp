#include "rsc/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "rsc/union_find.hpp"

namespace rsc {
namespace {

void requireDimension(const Complex& c, int j) {
  if (j < 0 || j > c.k()) throw std::out_of_range("cochain dimension outside [0, k]");
}

void requireShape(const Complex& c, const Cochain& f) {
  requireDimension(c, f.dimension);
  if (f.values.size() != c.count(f.dimension))
    throw std::invalid_argument("cochain length does not match the number of simplices");
}

}  // namespace

Cochain makeCochain(const Complex& c, int j, std::span<const Simplex> support) {
  requireDimension(c, j);
  const SimplexIndex& idx = c.simplices(j);
  Cochain f{j, Gf2Vector(idx.size())};
  for (const Simplex& s : support) {
    auto i = idx.indexOf(s);
    if (!i) throw std::invalid_argument("cochain support {" + s.toString() + "} is not a simplex");
    f.values.set(*i);
  }
  return f;
}

Cochain zeroCochain(const Complex& c, int j) {
  requireDimension(c, j);
  return Cochain{j, Gf2Vector(c.count(j))};
}

std::vector<Simplex> supportOf(const Complex& c, const Cochain& f) {
  requireShape(c, f);
  const SimplexIndex& idx = c.simplices(f.dimension);
  std::vector<Simplex> out;
  for (size_t i : f.values.support()) out.push_back(idx.simplexAt(i));
  return out;
}

Gf2Matrix coboundaryMatrix(const Complex& c, int j) {
  if (j < -1 || j > c.k()) throw std::out_of_range("coboundary degree outside [-1, k]");
  if (j == -1) return Gf2Matrix(c.count(0), 0);
  if (j == c.k()) return Gf2Matrix(0, c.count(j));
  const SimplexIndex& rows = c.simplices(j + 1);
  const SimplexIndex& cols = c.simplices(j);
  Gf2Matrix m(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    Simplex s = rows.simplexAt(r);
    forEachFacet(s, [&](const Simplex& facet, Vertex) { m.set(r, *cols.indexOf(facet)); });
  }
  return m;
}

Gf2Matrix boundaryMatrix(const Complex& c, int j) { return coboundaryMatrix(c, j - 1).transposed(); }

size_t coboundaryRank(const Complex& c, int j) {
  if (j < 0 || j >= c.k()) return 0;
  if (j == 0) return c.count(0) - componentCount(c);
  return rank(coboundaryMatrix(c, j));
}

size_t betti(const Complex& c, int j) {
  requireDimension(c, j);
  return c.count(j) - rank(coboundaryMatrix(c, j)) - rank(coboundaryMatrix(c, j - 1));
}

size_t componentCount(const Complex& c) {
  UnionFind uf(c.n());
  const SimplexIndex& edges = c.simplices(1);
  for (size_t i = 0; i < edges.size(); ++i) {
    Simplex e = edges.simplexAt(i);
    uf.unite(e[0], e[1]);
  }
  return uf.components();
}

size_t firstCohomologyDimension(const Complex& c) {
  const SimplexIndex& edges = c.simplices(1);
  const SimplexIndex& triangles = c.simplices(2);
  UnionFind forest(c.n());
  std::vector<uint32_t> tree;
  for (size_t i = 0; i < edges.size(); ++i) {
    Simplex e = edges.simplexAt(i);
    if (forest.unite(e[0], e[1])) tree.push_back(static_cast<uint32_t>(i));
  }
  std::vector<uint32_t> equations;
  equations.reserve(triangles.size() * 3);
  for (size_t t = 0; t < triangles.size(); ++t) {
    Simplex tri = triangles.simplexAt(t);
    forEachFacet(tri, [&](const Simplex& e, Vertex) {
      equations.push_back(static_cast<uint32_t>(*edges.indexOf(e)));
    });
  }
  return sparseNullity(edges.size(), equations, 3, tree);
}

size_t cohomologyDimension(const Complex& c, int j) {
  if (j == 0) return componentCount(c);
  if (j == 1) return firstCohomologyDimension(c);
  return betti(c, j);
}

bool isJCohomConnected(const Complex& c, int j) {
  if (j < 1 || j > c.k() - 1) throw std::out_of_range("j must lie in [1, k-1]");
  if (componentCount(c) != 1) return false;
  for (int i = 1; i <= j; ++i)
    if (cohomologyDimension(c, i) != 0) return false;
  return true;
}

bool isCocycle(const Complex& c, const Cochain& f) {
  requireShape(c, f);
  if (f.dimension == c.k()) return true;
  return !coboundaryMatrix(c, f.dimension).multiply(f.values).any();
}

std::optional<Cochain> findCoboundaryPreimage(const Complex& c, const Cochain& f) {
  requireShape(c, f);
  if (f.dimension == 0) {
    if (f.values.any()) return std::nullopt;
    return Cochain{-1, Gf2Vector(0)};
  }
  auto g = solveInColumnSpan(coboundaryMatrix(c, f.dimension - 1), f.values);
  if (!g) return std::nullopt;
  return Cochain{f.dimension - 1, std::move(*g)};
}

Cochain flowerCochain(const Complex& c, const MjMinusCopy& copy) {
  auto petals = copy.flower.petals();
  return makeCochain(c, copy.flower.j(), petals);
}

bool isGeneratedByMjMinus(const Complex& c, const Cochain& f, std::span<const MjMinusCopy> copies) {
  if (!isCocycle(c, f)) throw std::invalid_argument("isGeneratedByMjMinus: input is not a cocycle");
  const int j = f.dimension;
  Gf2Matrix cob = coboundaryMatrix(c, j - 1);
  Gf2Matrix m(c.count(j), cob.cols() + copies.size());
  for (size_t r = 0; r < cob.rows(); ++r)
    for (size_t col : cob.row(r).support()) m.set(r, col);
  for (size_t i = 0; i < copies.size(); ++i) {
    if (copies[i].flower.j() != j) throw std::invalid_argument("flower dimension does not match cochain");
    Cochain petals = flowerCochain(c, copies[i]);
    for (size_t r : petals.values.support()) m.set(r, cob.cols() + i);
  }
  return solveInColumnSpan(m, f.values).has_value();
}

CohomologySummary summarize(const Complex& c, RankMethod method) {
  CohomologySummary s;
  for (int d = 0; d <= c.k(); ++d) s.fVector.push_back(c.count(d));
  if (method == RankMethod::Dense) {
    std::vector<size_t> ranks(c.k() + 1, 0);  // ranks[j] = rank of d^j
    for (int j = 0; j < c.k(); ++j) ranks[j] = rank(coboundaryMatrix(c, j));
    for (int j = 0; j <= c.k(); ++j)
      s.bettis.push_back(s.fVector[j] - ranks[j] - (j > 0 ? ranks[j - 1] : 0));
    return s;
  }
  s.bettis.push_back(componentCount(c));
  for (int j = 1; j < c.k(); ++j) s.bettis.push_back(cohomologyDimension(c, j));
  int64_t chi = 0;
  for (int j = 0; j <= c.k(); ++j) chi += (j % 2 ? -1 : 1) * static_cast<int64_t>(s.fVector[j]);
  for (int j = 0; j < c.k(); ++j) chi -= (j % 2 ? -1 : 1) * static_cast<int64_t>(s.bettis[j]);
  s.bettis.push_back(static_cast<size_t>(c.k() % 2 ? -chi : chi));
  return s;
}

}  // namespace rsc
