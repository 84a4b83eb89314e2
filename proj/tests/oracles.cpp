#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<uint64_t>> pascal(n + 1, std::vector<uint64_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    pascal[a][0] = 1;
    for (int b = 1; b <= a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + (b <= a - 1 ? pascal[a - 1][b] : 0);
  }
  return pascal[n][k];
}

std::vector<VertexSet> colexSubsets(int n, int k) {
  std::vector<VertexSet> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  // Colex order of sets is the numeric order of their bitmasks.
  return out;
}

std::vector<std::set<VertexSet>> closure(int n, int k, const std::vector<VertexSet>& tops, bool fullLowerSkeleton) {
  std::vector<std::set<VertexSet>> faces(k + 1);
  for (int v = 0; v < n; ++v) faces[0].insert({v});
  if (fullLowerSkeleton)
    for (int d = 1; d < k; ++d)
      for (const VertexSet& s : colexSubsets(n, d + 1)) faces[d].insert(s);
  for (const VertexSet& top : tops) {
    const int size = static_cast<int>(top.size());
    for (uint32_t mask = 1; mask < (1u << size); ++mask) {
      VertexSet s;
      for (int i = 0; i < size; ++i)
        if (mask >> i & 1) s.push_back(top[i]);
      faces[s.size() - 1].insert(s);
    }
  }
  return faces;
}

namespace {

bool isFacet(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Rows: (j+1)-faces; entry set when the j-face lies in it.
std::vector<uint64_t> incidence(const std::vector<std::set<VertexSet>>& faces, int j) {
  std::vector<uint64_t> rows;
  if (j + 1 >= static_cast<int>(faces.size())) return rows;
  std::vector<VertexSet> lower(faces[j].begin(), faces[j].end());
  for (const VertexSet& up : faces[j + 1]) {
    uint64_t mask = 0;
    for (size_t i = 0; i < lower.size(); ++i)
      if (isFacet(lower[i], up)) mask |= uint64_t{1} << i;
    rows.push_back(mask);
  }
  return rows;
}

}  // namespace

size_t betti(const std::vector<std::set<VertexSet>>& faces, int j) {
  const size_t fj = faces[j].size();
  if (fj > 24) throw std::invalid_argument("oracle betti: too many faces");
  std::vector<uint64_t> rows = incidence(faces, j);
  uint64_t cocycles = 0;
  for (uint64_t f = 0; f < (uint64_t{1} << fj); ++f) {
    bool closed = true;
    for (uint64_t r : rows) closed = closed && __builtin_popcountll(f & r) % 2 == 0;
    cocycles += closed;
  }
  std::set<uint64_t> image{0};
  if (j > 0) {
    std::vector<uint64_t> lowerRows = incidence(faces, j - 1);  // rows: j-faces, bits: (j-1)-faces
    const size_t fl = faces[j - 1].size();
    if (fl > 22) throw std::invalid_argument("oracle betti: too many faces");
    for (uint64_t g = 0; g < (uint64_t{1} << fl); ++g) {
      uint64_t value = 0;
      for (size_t r = 0; r < lowerRows.size(); ++r)
        if (__builtin_popcountll(g & lowerRows[r]) % 2) value |= uint64_t{1} << r;
      image.insert(value);
    }
  }
  uint64_t ratio = cocycles / image.size();
  size_t b = 0;
  while ((uint64_t{1} << b) < ratio) ++b;
  return b;
}

size_t components(const std::vector<std::set<VertexSet>>& faces, int n) {
  std::vector<std::vector<int>> adjacent(n);
  if (faces.size() > 1)
    for (const VertexSet& e : faces[1]) {
      adjacent[e[0]].push_back(e[1]);
      adjacent[e[1]].push_back(e[0]);
    }
  std::vector<bool> seen(n, false);
  size_t count = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++count;
    std::vector<int> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adjacent[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
  }
  return count;
}

int degree(const std::vector<VertexSet>& tops, const VertexSet& s) {
  int d = 0;
  for (const VertexSet& t : tops) d += isFacet(s, t);
  return d;
}

std::set<Flower> mjMinus(const std::vector<VertexSet>& tops, int k, int j) {
  std::set<Flower> out;
  for (const VertexSet& top : tops)
    for (uint32_t mask = 0; mask < (1u << (k + 1)); ++mask) {
      if (__builtin_popcount(mask) != j) continue;
      VertexSet centre;
      for (int i = 0; i <= k; ++i)
        if (mask >> i & 1) centre.push_back(top[i]);
      bool ok = true;
      for (int w : top) {
        if (std::count(centre.begin(), centre.end(), w)) continue;
        VertexSet petal = centre;
        petal.push_back(w);
        std::sort(petal.begin(), petal.end());
        ok = ok && degree(tops, petal) == 1;
      }
      if (ok) out.insert({top, centre});
    }
  return out;
}

std::set<Petal> mjByCycleEnumeration(const std::vector<std::set<VertexSet>>& faces,
                                     const std::vector<VertexSet>& tops, int k) {
  std::vector<VertexSet> edges(faces[1].begin(), faces[1].end());
  std::map<VertexSet, size_t> edgeIndex;
  for (size_t i = 0; i < edges.size(); ++i) edgeIndex[edges[i]] = i;
  const int n = static_cast<int>(faces[0].size());
  // Cycle space basis: fundamental cycles of a spanning forest.
  std::vector<int> parent(n, -1), parentEdge(n, -1), depth(n, 0);
  std::vector<std::vector<std::pair<int, int>>> adjacent(n);
  for (size_t i = 0; i < edges.size(); ++i) {
    adjacent[edges[i][0]].push_back({edges[i][1], static_cast<int>(i)});
    adjacent[edges[i][1]].push_back({edges[i][0], static_cast<int>(i)});
  }
  std::vector<bool> seen(n, false), treeEdge(edges.size(), false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<int> queue{root};
    for (size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (auto [y, e] : adjacent[x])
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = x;
          parentEdge[y] = e;
          depth[y] = depth[x] + 1;
          treeEdge[e] = true;
          queue.push_back(y);
        }
    }
  }
  std::vector<uint64_t> basis;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (treeEdge[i]) continue;
    uint64_t cycle = uint64_t{1} << i;
    int a = edges[i][0], b = edges[i][1];
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cycle ^= uint64_t{1} << parentEdge[a];
      a = parent[a];
    }
    basis.push_back(cycle);
  }
  if (basis.size() > 22) throw std::invalid_argument("oracle: cycle space too large");
  std::vector<uint64_t> cycles;
  for (uint64_t mask = 1; mask < (uint64_t{1} << basis.size()); ++mask) {
    uint64_t c = 0;
    for (size_t i = 0; i < basis.size(); ++i)
      if (mask >> i & 1) c ^= basis[i];
    cycles.push_back(c);
  }
  std::set<Petal> out;
  for (const Flower& f : mjMinus(tops, k, 1)) {
    uint64_t flowerMask = 0;
    std::vector<std::pair<VertexSet, uint64_t>> petals;
    for (int w : f.top) {
      if (w == f.centre[0]) continue;
      VertexSet p{std::min(w, f.centre[0]), std::max(w, f.centre[0])};
      uint64_t bit = uint64_t{1} << edgeIndex.at(p);
      petals.push_back({p, bit});
      flowerMask |= bit;
    }
    for (const auto& [p, bit] : petals)
      if (std::any_of(cycles.begin(), cycles.end(), [&](uint64_t c) { return (c & flowerMask) == bit; }))
        out.insert({f, p});
  }
  return out;
}

std::vector<VertexSet> toSets(std::span<const rsc::Simplex> simplices) {
  std::vector<VertexSet> out;
  for (const rsc::Simplex& s : simplices) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace oracle
