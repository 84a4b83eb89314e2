#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsc/simplex.hpp"

namespace rsc {

/// G: lower simplices are exactly the faces of the hyperedges (plus all
/// vertices). Y: the full (k-1)-skeleton is always present.
enum class Model { G, Y };

std::string toString(Model model);
Model parseModel(const std::string& text);

/// Dense indexing of the d-simplices of a complex, in colex order.
class SimplexIndex {
 public:
  SimplexIndex(int dimension, std::vector<SimplexRank> sortedRanks);

  int dimension() const { return dimension_; }
  size_t size() const { return ranks_.size(); }
  std::span<const SimplexRank> ranks() const { return ranks_; }
  SimplexRank rankAt(size_t i) const { return ranks_[i]; }
  Simplex simplexAt(size_t i) const { return Simplex::fromRank(ranks_[i], dimension_ + 1); }

  std::optional<size_t> indexOfRank(SimplexRank rank) const;
  std::optional<size_t> indexOf(const Simplex& s) const;

 private:
  int dimension_;
  std::vector<SimplexRank> ranks_;
};

/// An immutable k-dimensional simplicial complex on vertices [0, n).
///
/// The complex is defined by its hyperedges (the random part) plus an
/// optional side set of added simplices, each carrying its downward closure.
/// Per-dimension simplex indices and k-degree tables are derived on first use
/// and shared between copies.
class Complex {
 public:
  int n() const;
  int k() const;
  Model model() const;

  /// The hyperedges the complex was built from, colex-sorted.
  std::span<const Simplex> hyperedges() const;
  /// Simplices added after construction (each implies its faces).
  std::span<const Simplex> extraSimplices() const;
  /// All k-simplices: hyperedges plus added (k+1)-sets.
  std::span<const Simplex> topSimplices() const;

  const SimplexIndex& simplices(int d) const;
  size_t count(int d) const { return simplices(d).size(); }
  bool contains(const Simplex& s) const;

  /// Number of k-simplices containing each d-simplex, aligned with simplices(d).
  std::span<const uint32_t> kDegrees(int d) const;
  /// Number of k-simplices containing an arbitrary vertex set (0 if none).
  uint32_t coveringDegree(const Simplex& s) const;

 private:
  struct Impl;
  explicit Complex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend Complex makeComplex(int, int, Model, std::vector<Simplex>, std::vector<Simplex>);
};

Complex buildG(int n, int k, std::vector<Simplex> hyperedges);
Complex buildY(int n, int k, std::vector<Simplex> hyperedges);
Complex build(Model model, int n, int k, std::vector<Simplex> hyperedges);

/// The complex c + B: B and all its nonempty subsets are added. Returns an
/// equal complex when B is already a simplex.
Complex addSimplex(const Complex& c, const Simplex& b);

/// Number of k-simplices containing s; throws std::invalid_argument if s is
/// not a simplex of c.
uint32_t kDegree(const Complex& c, const Simplex& s);

/// The d-simplices of c in colex order.
std::vector<Simplex> simplexList(const Complex& c, int d);

/// Text fixture: a header line `n k model` followed by one hyperedge per
/// line as 1-based vertices. Blank lines and lines starting with '#' are
/// skipped.
Complex readComplex(std::istream& in);
Complex readComplexFile(const std::string& path);
void writeComplex(std::ostream& out, const Complex& c);

}  // namespace rsc
