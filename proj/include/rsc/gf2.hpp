#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rsc {

/// A vector over the two-element field, packed 64 entries per word.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  static Gf2Vector fromSupport(size_t size, std::span<const size_t> support);

  size_t size() const { return size_; }
  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i, bool value = true);
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  bool any() const;
  size_t count() const;
  /// Index of the lowest set entry at or after `from`, or size() if none.
  size_t firstSet(size_t from = 0) const;
  std::vector<size_t> support() const;

  Gf2Vector& operator^=(const Gf2Vector& other);
  /// Inner product over the field.
  bool dot(const Gf2Vector& other) const;

  std::span<uint64_t> words() { return words_; }
  std::span<const uint64_t> words() const { return words_; }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

/// A dense row-major matrix over the two-element field. Bits past cols() in
/// the last word of each row are always zero.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(size_t rows, size_t cols);
  static Gf2Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t wordsPerRow() const { return wordsPerRow_; }

  bool get(size_t r, size_t c) const { return (rowWords(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(size_t r, size_t c, bool value = true);
  void flip(size_t r, size_t c) { rowWords(r)[c >> 6] ^= uint64_t{1} << (c & 63); }

  std::span<uint64_t> rowWords(size_t r) { return {data_.data() + r * wordsPerRow_, wordsPerRow_}; }
  std::span<const uint64_t> rowWords(size_t r) const {
    return {data_.data() + r * wordsPerRow_, wordsPerRow_};
  }
  Gf2Vector row(size_t r) const;
  Gf2Vector column(size_t c) const;
  void setRow(size_t r, const Gf2Vector& v);
  void clearColumn(size_t c);
  void swapRows(size_t a, size_t b);
  /// row[dst] += row[src], touching words from `fromWord` on.
  void addRow(size_t dst, size_t src, size_t fromWord = 0);

  Gf2Matrix transposed() const;
  /// Returns m * x (length rows()).
  Gf2Vector multiply(const Gf2Vector& x) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t wordsPerRow_ = 0;
  std::vector<uint64_t> data_;
};

/// In-place reduction to reduced row echelon form over the first `colLimit`
/// columns (all columns when colLimit exceeds cols()). Returns the pivot
/// column of each of the first rank rows.
std::vector<size_t> reduceToRref(Gf2Matrix& m, size_t colLimit = SIZE_MAX);

/// Rank over the field. Takes its argument by value; the caller's matrix is
/// untouched.
size_t rank(Gf2Matrix m);

/// Some x with m * x = b, or nullopt when b is outside the column span.
/// Throws std::invalid_argument when b.size() != m.rows().
std::optional<Gf2Vector> solveInColumnSpan(const Gf2Matrix& m, const Gf2Vector& b);

/// A basis of {x : m * x = 0}; it has cols() - rank(m) elements.
std::vector<Gf2Vector> nullspaceBasis(const Gf2Matrix& m);

/// Incrementally maintained echelon basis of a subspace of F2^length. Each
/// stored vector owns its lowest set entry as pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t length) : length_(length), owner_(length, -1) {}

  size_t length() const { return length_; }
  size_t rank() const { return basis_.size(); }

  /// Adds v to the spanning set; true when it increased the rank.
  bool insert(Gf2Vector v);
  /// True when v lies in the span.
  bool contains(Gf2Vector v) const;
  /// Reduces v in place; returns its lowest remaining entry (length() if zero).
  size_t reduce(Gf2Vector& v) const;

 private:
  size_t length_;
  std::vector<Gf2Vector> basis_;
  std::vector<int32_t> owner_;
};

}  // namespace rsc

namespace rsc {

/// Dimension of the solution space of a homogeneous sparse system in which
/// every equation has exactly `arity` terms (a variable may repeat) and the
/// variables in `fixedZero` are pinned to zero.
///
/// Equations that reduce to one free class pin it to zero and equations that
/// reduce to two classes merge them; this is repeated to a fixed point and
/// the remaining equations are eliminated densely.
size_t sparseNullity(size_t numVars, std::span<const uint32_t> equations, size_t arity,
                     std::span<const uint32_t> fixedZero);

}  // namespace rsc
