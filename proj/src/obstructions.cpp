#include "rsc/obstructions.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "rsc/union_find.hpp"

namespace rsc {

std::vector<Simplex> Flower::petals() const {
  std::vector<Simplex> out;
  for (Vertex w : top)
    if (!centre.contains(w)) out.push_back(centre.with(w));
  return out;
}

namespace {

void requireObstructionDimension(const Complex& c, int j) {
  if (j < 1 || j > c.k() - 1) throw std::out_of_range("j must lie in [1, k-1]");
}

/// Calls fn(centre) for each j-subset C of `top` whose petals all have
/// k-degree 1.
template <typename Fn>
void forEachPrivateFlower(const Complex& c, const Simplex& top, int j, Fn&& fn) {
  const SimplexIndex& faces = c.simplices(j);
  auto degrees = c.kDegrees(j);
  forEachSubset(top, j, [&](const Simplex& centre) {
    for (Vertex w : top) {
      if (centre.contains(w)) continue;
      if (degrees[*faces.indexOf(centre.with(w))] != 1) return;
    }
    fn(centre);
  });
}

/// Echelon basis of the coboundaries d^{j-1} g, as vectors over j-simplices.
EchelonBasis coboundarySpace(const Gf2Matrix& boundary) {
  EchelonBasis basis(boundary.cols());
  for (size_t r = 0; r < boundary.rows(); ++r) basis.insert(boundary.row(r));
  return basis;
}

}  // namespace

std::vector<MjMinusCopy> findMjMinus(const Complex& c, int j) {
  requireObstructionDimension(c, j);
  std::vector<MjMinusCopy> out;
  for (const Simplex& top : c.topSimplices())
    forEachPrivateFlower(c, top, j, [&](const Simplex& centre) { out.push_back({{top, centre}}); });
  return out;
}

size_t countMjMinus(const Complex& c, int j) {
  requireObstructionDimension(c, j);
  size_t total = 0;
  for (const Simplex& top : c.topSimplices()) forEachPrivateFlower(c, top, j, [&](const Simplex&) { ++total; });
  return total;
}

std::vector<MjStarCopy> findMjStar(const Complex& c, int j) {
  std::vector<MjStarCopy> out;
  for (const MjMinusCopy& copy : findMjMinus(c, j)) {
    const Simplex& top = copy.flower.top;
    const Simplex& centre = copy.flower.centre;
    for (Vertex w : top) {
      if (centre.contains(w)) continue;
      Simplex base = centre.with(w);
      for (Vertex a = 0; a < c.n(); ++a) {
        if (top.contains(a)) continue;
        bool shell = true;
        forEachSubset(base, j, [&](const Simplex& side) {
          if (shell && !c.contains(side.with(a))) shell = false;
        });
        if (shell) out.push_back({copy, w, a});
      }
    }
  }
  return out;
}

std::vector<MjCopy> findMj(const Complex& c, int j) {
  std::vector<MjMinusCopy> copies = findMjMinus(c, j);
  std::vector<MjCopy> out;
  if (copies.empty()) return out;
  const SimplexIndex& faces = c.simplices(j);
  Gf2Matrix boundary = boundaryMatrix(c, j);
  EchelonBasis coboundaries = coboundarySpace(boundary);
  for (const MjMinusCopy& copy : copies) {
    if (coboundaries.contains(flowerCochain(c, copy).values)) continue;
    std::vector<Simplex> petals = copy.flower.petals();
    Gf2Matrix allowed = boundary;
    for (const Simplex& p : petals) allowed.clearColumn(*faces.indexOf(p));
    for (const Simplex& p : petals) {
      auto x = solveInColumnSpan(allowed, boundary.column(*faces.indexOf(p)));
      if (!x) continue;
      MjCopy found{copy, p, {p}};
      for (size_t i : x->support()) found.cycle.push_back(faces.simplexAt(i));
      std::sort(found.cycle.begin(), found.cycle.end(), colexLess);
      out.push_back(std::move(found));
    }
  }
  return out;
}

size_t countMjPairs(const Complex& c, int j) {
  std::vector<MjMinusCopy> copies = findMjMinus(c, j);
  if (copies.empty()) return 0;
  EchelonBasis coboundaries = coboundarySpace(boundaryMatrix(c, j));
  size_t total = 0;
  for (const MjMinusCopy& copy : copies)
    if (!coboundaries.contains(flowerCochain(c, copy).values)) ++total;
  return total;
}

std::vector<LocalObstacle> findLocalObstacles(const Complex& c, int j) {
  requireObstructionDimension(c, j);
  const SimplexIndex& faces = c.simplices(j);
  auto degrees = c.kDegrees(j);
  std::vector<LocalObstacle> out;
  for (const Simplex& top : c.topSimplices()) {
    LocalObstacle obstacle{top, {}};
    forEachSubset(top, j + 1, [&](const Simplex& f) {
      if (degrees[*faces.indexOf(f)] == 1) obstacle.privateFaces.push_back(f);
    });
    if (static_cast<int>(obstacle.privateFaces.size()) >= c.k() - j + 1) out.push_back(std::move(obstacle));
  }
  return out;
}

ShellQuery countShellsThrough(const Complex& c, const Simplex& b) {
  const int j = b.size() - 1;
  requireObstructionDimension(c, j);
  Complex withB = addSimplex(c, b);
  ShellQuery q;
  for (Vertex a = 0; a < c.n(); ++a) {
    if (b.contains(a)) continue;
    bool shell = true;
    forEachSubset(b, j, [&](const Simplex& side) {
      if (shell && !withB.contains(side.with(a))) shell = false;
    });
    if (shell) q.apexes.push_back(a);
  }
  return q;
}

bool isHollowShell(const Complex& c, const Simplex& a) {
  if (a.size() < 2) throw std::invalid_argument("a shell has at least two vertices");
  bool allFaces = true;
  forEachSubset(a, a.size() - 1, [&](const Simplex& f) {
    if (allFaces && !c.contains(f)) allFaces = false;
  });
  return allFaces && !c.contains(a);
}

std::vector<Simplex> findIsolated(const Complex& c) {
  if (c.model() != Model::Y)
    throw std::invalid_argument("isolated (k-1)-simplices are only defined for the Y model");
  const SimplexIndex& ridges = c.simplices(c.k() - 1);
  auto degrees = c.kDegrees(c.k() - 1);
  std::vector<Simplex> out;
  for (size_t i = 0; i < ridges.size(); ++i)
    if (degrees[i] == 0) out.push_back(ridges.simplexAt(i));
  return out;
}

bool isTraversable(const Complex& c, std::span<const Simplex> s) {
  if (s.empty()) return true;
  const int j = s[0].dimension();
  for (const Simplex& sigma : s)
    if (sigma.dimension() != j || !c.contains(sigma))
      throw std::invalid_argument("traversability: {" + sigma.toString() + "} is not a j-simplex");
  UnionFind uf(s.size());
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b) {
      Simplex u = setUnion(s[a], s[b]);
      if (u.size() <= c.k() + 1 && c.coveringDegree(u) > 0) uf.unite(a, b);
    }
  return uf.components() == 1;
}

TraversableSupports enumerateTraversableCocycleSupports(const Complex& c, int j, size_t maxSize,
                                                        size_t nodeBudget) {
  requireObstructionDimension(c, j);
  TraversableSupports result;
  const SimplexIndex& faces = c.simplices(j);
  const size_t m = faces.size();
  if (m == 0 || maxSize == 0) return result;

  // Adjacency: j-simplices sharing a k-simplex.
  std::vector<std::vector<uint32_t>> adjacent(m);
  for (const Simplex& top : c.topSimplices()) {
    std::vector<uint32_t> inTop;
    forEachSubset(top, j + 1, [&](const Simplex& f) { inTop.push_back(static_cast<uint32_t>(*faces.indexOf(f))); });
    for (uint32_t a : inTop)
      for (uint32_t b : inTop)
        if (a != b) adjacent[a].push_back(b);
  }
  for (auto& list : adjacent) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // The cocycle condition lives on (j+1)-simplices; each j-simplex touches a
  // bounded number of them, which bounds how many odd cofaces one more
  // member can repair.
  Gf2Matrix cob = coboundaryMatrix(c, j);
  Gf2Matrix cofaces = cob.transposed();
  size_t maxCofaces = 0;
  for (size_t i = 0; i < m; ++i) maxCofaces = std::max(maxCofaces, cofaces.row(i).count());

  for (uint32_t seed = 0; seed < m && !result.truncated; ++seed) {
    std::set<std::vector<uint32_t>> seen;
    std::deque<std::vector<uint32_t>> queue;
    queue.push_back({seed});
    seen.insert({seed});
    while (!queue.empty()) {
      if (++result.nodesVisited > nodeBudget) {
        result.truncated = true;
        break;
      }
      std::vector<uint32_t> current = std::move(queue.front());
      queue.pop_front();

      Gf2Vector indicator(m);
      for (uint32_t i : current) indicator.set(i);
      size_t odd = cob.rows() ? cob.multiply(indicator).count() : 0;
      if (odd == 0) {
        std::vector<Simplex> support;
        for (uint32_t i : current) support.push_back(faces.simplexAt(i));
        result.supports.push_back(std::move(support));
      }
      size_t remaining = maxSize - current.size();
      if (remaining == 0 || odd > remaining * maxCofaces) continue;

      std::vector<uint32_t> frontier;
      for (uint32_t i : current)
        for (uint32_t nb : adjacent[i])
          if (nb > seed && !std::binary_search(current.begin(), current.end(), nb)) frontier.push_back(nb);
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      for (uint32_t nb : frontier) {
        std::vector<uint32_t> grown = current;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), nb), nb);
        if (seen.insert(grown).second) queue.push_back(std::move(grown));
      }
    }
  }
  return result;
}

MeshulamWallachResult meshulamWallachCheck(int n, int j, std::span<const Simplex> support) {
  if (j < 0 || n < j + 2) throw std::invalid_argument("meshulamWallachCheck requires n >= j + 2");
  const uint64_t lower = binomial(n, j);
  const uint64_t faces = binomial(n, j + 1);
  if (lower > 24 || faces > 64)
    throw std::invalid_argument("meshulamWallachCheck: brute-force budget exceeded");
  uint64_t f = 0;
  for (const Simplex& s : support) {
    if (s.size() != j + 1 || s.maxVertex() >= n)
      throw std::invalid_argument("cochain support entry is not a j-simplex of the complete complex");
    f ^= uint64_t{1} << s.rank();
  }

  // Coboundary of each (j-1)-simplex, as a mask over j-simplices.
  std::vector<uint64_t> columns;
  if (j > 0) {
    for (uint64_t r = 0; r < lower; ++r) {
      Simplex tau = Simplex::fromRank(r, j);
      uint64_t mask = 0;
      for (Vertex v = 0; v < n; ++v)
        if (!tau.contains(v)) mask |= uint64_t{1} << tau.with(v).rank();
      columns.push_back(mask);
    }
  }
  MeshulamWallachResult result;
  uint64_t image = 0;
  size_t best = std::popcount(f);
  const uint64_t combinations = uint64_t{1} << columns.size();
  for (uint64_t g = 1; g < combinations; ++g) {
    image ^= columns[std::countr_zero(g)];  // Gray-code step
    best = std::min<size_t>(best, std::popcount(f ^ image));
  }
  result.w = best;

  const uint64_t cofaces = binomial(n, j + 2);
  for (uint64_t r = 0; r < cofaces; ++r) {
    uint64_t mask = 0;
    forEachFacet(Simplex::fromRank(r, j + 2), [&](const Simplex& facet, Vertex) { mask |= uint64_t{1} << facet.rank(); });
    if (std::popcount(f & mask) & 1) ++result.b;
  }
  result.holds = result.b * static_cast<size_t>(j + 2) >= result.w * static_cast<size_t>(n);
  return result;
}

}  // namespace rsc
