#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rsc/binomial.hpp"

namespace rsc {

/// A simplex stored as its strictly increasing vertex list. Unused slots are
/// kept at zero so that defaulted equality is exact.
class Simplex {
 public:
  static constexpr int kMaxSize = 16;

  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);
  /// Sorts the input; throws std::invalid_argument on duplicates, negative
  /// vertices or more than kMaxSize entries.
  explicit Simplex(std::span<const Vertex> vertices);

  static Simplex fromRank(SimplexRank rank, int size);

  int size() const { return size_; }
  int dimension() const { return size_ - 1; }
  bool empty() const { return size_ == 0; }
  Vertex operator[](int i) const { return vertices_[i]; }
  const Vertex* begin() const { return vertices_.data(); }
  const Vertex* end() const { return vertices_.data() + size_; }
  std::span<const Vertex> vertices() const { return {begin(), end()}; }
  Vertex maxVertex() const { return size_ ? vertices_[size_ - 1] : -1; }

  SimplexRank rank() const { return colexRank(vertices()); }

  bool contains(Vertex v) const;
  bool isSubsetOf(const Simplex& other) const;
  Simplex with(Vertex v) const;
  Simplex without(Vertex v) const;

  /// Space-separated vertices, shifted by `offset` (1 for the 1-based text format).
  std::string toString(int offset = 0) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::array<Vertex, kMaxSize> vertices_{};
  uint8_t size_ = 0;
};

/// Colexicographic order, consistent with rank().
bool colexLess(const Simplex& a, const Simplex& b);

Simplex setUnion(const Simplex& a, const Simplex& b);
Simplex setDifference(const Simplex& a, const Simplex& b);

/// Calls fn(Simplex) for every subset of `s` with exactly `size` elements, in
/// lexicographic order of chosen positions.
template <typename Fn>
void forEachSubset(const Simplex& s, int size, Fn&& fn) {
  const int n = s.size();
  if (size < 0 || size > n) return;
  std::array<int, Simplex::kMaxSize> idx{};
  for (int i = 0; i < size; ++i) idx[i] = i;
  std::array<Vertex, Simplex::kMaxSize> buf{};
  while (true) {
    for (int i = 0; i < size; ++i) buf[i] = s[idx[i]];
    fn(Simplex(std::span<const Vertex>(buf.data(), size)));
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int t = i + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
  }
}

/// Calls fn(Simplex facet, Vertex removed) for each codimension-one face.
template <typename Fn>
void forEachFacet(const Simplex& s, Fn&& fn) {
  for (Vertex v : s) fn(s.without(v), v);
}

std::vector<Simplex> allSubsetsOfSize(const Simplex& s, int size);

}  // namespace rsc
