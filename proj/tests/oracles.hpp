// Brute-force reference implementations used only by the tests. They work
// on plain vertex sets and share no code with the library beyond the
// Simplex value type at the boundary.
#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "rsc/complex.hpp"

namespace oracle {

using VertexSet = std::vector<int>;

uint64_t choose(int n, int k);

/// Every k-subset of [0, n), listed in colex order (compare largest
/// elements first).
std::vector<VertexSet> colexSubsets(int n, int k);

/// Downward closure of `tops`, grouped by dimension 0..k; singletons of
/// all n vertices are included.
std::vector<std::set<VertexSet>> closure(int n, int k, const std::vector<VertexSet>& tops, bool fullLowerSkeleton);

/// log2(#cocycles / #coboundaries) by listing every cochain.
size_t betti(const std::vector<std::set<VertexSet>>& faces, int j);

/// Components of the 1-skeleton by repeated graph search.
size_t components(const std::vector<std::set<VertexSet>>& faces, int n);

/// Number of tops containing `s`.
int degree(const std::vector<VertexSet>& tops, const VertexSet& s);

struct Flower {
  VertexSet top;
  VertexSet centre;
  bool operator<(const Flower& o) const { return std::tie(top, centre) < std::tie(o.top, o.centre); }
  bool operator==(const Flower&) const = default;
};

std::set<Flower> mjMinus(const std::vector<VertexSet>& tops, int k, int j);

struct Petal {
  Flower flower;
  VertexSet petal;
  bool operator<(const Petal& o) const {
    return std::tie(flower, petal) < std::tie(o.flower, o.petal);
  }
  bool operator==(const Petal&) const = default;
};

/// (K, C, P) such that some 1-cycle of the graph contains P and no other
/// petal of F(K, C); found by listing the whole cycle space. j = 1 only.
std::set<Petal> mjByCycleEnumeration(const std::vector<std::set<VertexSet>>& faces,
                                     const std::vector<VertexSet>& tops, int k);

std::vector<VertexSet> toSets(std::span<const rsc::Simplex> simplices);

}  // namespace oracle
