#include "rsc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rsc {

Gf2Vector Gf2Vector::fromSupport(size_t size, std::span<const size_t> support) {
  Gf2Vector v(size);
  for (size_t i : support) {
    if (i >= size) throw std::out_of_range("support entry outside vector length");
    v.flip(i);
  }
  return v;
}

void Gf2Vector::set(size_t i, bool value) {
  uint64_t mask = uint64_t{1} << (i & 63);
  if (value)
    words_[i >> 6] |= mask;
  else
    words_[i >> 6] &= ~mask;
}

bool Gf2Vector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

size_t Gf2Vector::count() const {
  size_t total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

size_t Gf2Vector::firstSet(size_t from) const {
  if (from >= size_) return size_;
  size_t wi = from >> 6;
  uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
  while (true) {
    if (w) return std::min(size_, (wi << 6) + std::countr_zero(w));
    if (++wi == words_.size()) return size_;
    w = words_[wi];
  }
}

std::vector<size_t> Gf2Vector::support() const {
  std::vector<size_t> out;
  for (size_t wi = 0; wi < words_.size(); ++wi) {
    uint64_t w = words_[wi];
    while (w) {
      out.push_back((wi << 6) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.size_ != size_) throw std::invalid_argument("vector length mismatch");
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("vector length mismatch");
  uint64_t acc = 0;
  for (size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wordsPerRow_((cols + 63) / 64), data_(rows * wordsPerRow_, 0) {}

Gf2Matrix Gf2Matrix::identity(size_t n) {
  Gf2Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void Gf2Matrix::set(size_t r, size_t c, bool value) {
  uint64_t mask = uint64_t{1} << (c & 63);
  if (value)
    rowWords(r)[c >> 6] |= mask;
  else
    rowWords(r)[c >> 6] &= ~mask;
}

Gf2Vector Gf2Matrix::row(size_t r) const {
  Gf2Vector v(cols_);
  std::copy(rowWords(r).begin(), rowWords(r).end(), v.words().begin());
  return v;
}

Gf2Vector Gf2Matrix::column(size_t c) const {
  Gf2Vector v(rows_);
  for (size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.flip(r);
  return v;
}

void Gf2Matrix::setRow(size_t r, const Gf2Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::copy(v.words().begin(), v.words().end(), rowWords(r).begin());
}

void Gf2Matrix::clearColumn(size_t c) {
  for (size_t r = 0; r < rows_; ++r) set(r, c, false);
}

void Gf2Matrix::swapRows(size_t a, size_t b) {
  if (a == b) return;
  std::swap_ranges(rowWords(a).begin(), rowWords(a).end(), rowWords(b).begin());
}

void Gf2Matrix::addRow(size_t dst, size_t src, size_t fromWord) {
  uint64_t* d = data_.data() + dst * wordsPerRow_;
  const uint64_t* s = data_.data() + src * wordsPerRow_;
  for (size_t w = fromWord; w < wordsPerRow_; ++w) d[w] ^= s[w];
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    auto words = rowWords(r);
    for (size_t wi = 0; wi < words.size(); ++wi) {
      uint64_t w = words[wi];
      while (w) {
        t.flip((wi << 6) + std::countr_zero(w), r);
        w &= w - 1;
      }
    }
  }
  return t;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  Gf2Vector out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    uint64_t acc = 0;
    auto words = rowWords(r);
    for (size_t w = 0; w < wordsPerRow_; ++w) acc ^= words[w] & x.words()[w];
    if (std::popcount(acc) & 1) out.flip(r);
  }
  return out;
}

std::vector<size_t> reduceToRref(Gf2Matrix& m, size_t colLimit) {
  colLimit = std::min(colLimit, m.cols());
  std::vector<size_t> pivots;
  size_t pivotRow = 0;
  for (size_t c = 0; c < colLimit && pivotRow < m.rows(); ++c) {
    size_t word = c >> 6;
    uint64_t mask = uint64_t{1} << (c & 63);
    size_t found = pivotRow;
    while (found < m.rows() && !(m.rowWords(found)[word] & mask)) ++found;
    if (found == m.rows()) continue;
    m.swapRows(pivotRow, found);
    for (size_t r = 0; r < m.rows(); ++r)
      if (r != pivotRow && (m.rowWords(r)[word] & mask)) m.addRow(r, pivotRow, word);
    pivots.push_back(c);
    ++pivotRow;
  }
  return pivots;
}

size_t rank(Gf2Matrix m) {
  // Forward elimination only; rows below the pivot are cleared.
  size_t pivotRow = 0;
  for (size_t c = 0; c < m.cols() && pivotRow < m.rows(); ++c) {
    size_t word = c >> 6;
    uint64_t mask = uint64_t{1} << (c & 63);
    size_t found = pivotRow;
    while (found < m.rows() && !(m.rowWords(found)[word] & mask)) ++found;
    if (found == m.rows()) continue;
    m.swapRows(pivotRow, found);
    for (size_t r = pivotRow + 1; r < m.rows(); ++r)
      if (m.rowWords(r)[word] & mask) m.addRow(r, pivotRow, word);
    ++pivotRow;
  }
  return pivotRow;
}

std::optional<Gf2Vector> solveInColumnSpan(const Gf2Matrix& m, const Gf2Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solveInColumnSpan: rhs length != rows");
  const size_t n = m.cols();
  Gf2Matrix aug(m.rows(), n + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.rowWords(r).begin(), m.rowWords(r).end(), aug.rowWords(r).begin());
    if (b.get(r)) aug.set(r, n);
  }
  std::vector<size_t> pivots = reduceToRref(aug, n);
  for (size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug.get(r, n)) return std::nullopt;
  Gf2Vector x(n);
  for (size_t i = 0; i < pivots.size(); ++i)
    if (aug.get(i, n)) x.set(pivots[i]);
  return x;
}

std::vector<Gf2Vector> nullspaceBasis(const Gf2Matrix& m) {
  Gf2Matrix r = m;
  std::vector<size_t> pivots = reduceToRref(r);
  std::vector<bool> isPivot(m.cols(), false);
  for (size_t c : pivots) isPivot[c] = true;
  std::vector<Gf2Vector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    Gf2Vector v(m.cols());
    v.set(f);
    for (size_t i = 0; i < pivots.size(); ++i)
      if (r.get(i, f)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t EchelonBasis::reduce(Gf2Vector& v) const {
  if (v.size() != length_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
  size_t lead = v.firstSet();
  while (lead < length_ && owner_[lead] >= 0) {
    const Gf2Vector& b = basis_[owner_[lead]];
    auto dst = v.words();
    auto src = b.words();
    for (size_t w = lead >> 6; w < dst.size(); ++w) dst[w] ^= src[w];
    lead = v.firstSet(lead + 1);
  }
  return lead;
}

bool EchelonBasis::insert(Gf2Vector v) {
  size_t lead = reduce(v);
  if (lead == length_) return false;
  owner_[lead] = static_cast<int32_t>(basis_.size());
  basis_.push_back(std::move(v));
  return true;
}

bool EchelonBasis::contains(Gf2Vector v) const { return reduce(v) == length_; }

}  // namespace rsc

#include "rsc/union_find.hpp"

namespace rsc {

size_t sparseNullity(size_t numVars, std::span<const uint32_t> equations, size_t arity,
                     std::span<const uint32_t> fixedZero) {
  if (arity == 0 || equations.size() % arity != 0)
    throw std::invalid_argument("sparseNullity: equation buffer is not a multiple of arity");
  const size_t zero = numVars;
  UnionFind uf(numVars + 1);
  for (uint32_t v : fixedZero) uf.unite(v, zero);

  const size_t numEquations = equations.size() / arity;
  std::vector<uint32_t> pending(numEquations);
  for (size_t e = 0; e < numEquations; ++e) pending[e] = static_cast<uint32_t>(e);

  std::vector<size_t> roots;
  auto reduced = [&](uint32_t e) {
    roots.clear();
    const size_t zeroRoot = uf.find(zero);
    for (size_t t = 0; t < arity; ++t) {
      size_t r = uf.find(equations[e * arity + t]);
      if (r != zeroRoot) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    size_t out = 0;
    for (size_t i = 0; i < roots.size();) {
      if (i + 1 < roots.size() && roots[i] == roots[i + 1]) {
        i += 2;
      } else {
        roots[out++] = roots[i++];
      }
    }
    roots.resize(out);
  };

  bool changed = true;
  std::vector<uint32_t> next;
  while (changed && !pending.empty()) {
    changed = false;
    next.clear();
    for (uint32_t e : pending) {
      reduced(e);
      if (roots.empty()) continue;
      if (roots.size() == 1) {
        uf.unite(roots[0], zero);
        changed = true;
      } else if (roots.size() == 2) {
        uf.unite(roots[0], roots[1]);
        changed = true;
      } else {
        next.push_back(e);
      }
    }
    pending.swap(next);
  }

  // Classes that occur in few residual equations are numbered first, so
  // they become pivots early and the echelon rows stay sparse longer.
  const size_t zeroRoot = uf.find(zero);
  std::vector<std::vector<size_t>> rows;
  std::vector<uint32_t> occurrences(numVars + 1, 0);
  for (uint32_t e : pending) {
    reduced(e);
    for (size_t r : roots) ++occurrences[r];
    rows.push_back(roots);
  }
  std::vector<size_t> classRoots;
  for (size_t v = 0; v < numVars; ++v)
    if (uf.find(v) == v && v != zeroRoot) classRoots.push_back(v);
  std::stable_sort(classRoots.begin(), classRoots.end(),
                   [&](size_t a, size_t b) { return occurrences[a] < occurrences[b]; });
  std::vector<size_t> classOf(numVars + 1, 0);
  for (size_t i = 0; i < classRoots.size(); ++i) classOf[classRoots[i]] = i;
  const size_t classes = classRoots.size();
  EchelonBasis residual(classes);
  for (const auto& row : rows) {
    Gf2Vector v(classes);
    for (size_t r : row) v.flip(classOf[r]);
    residual.insert(std::move(v));
  }
  return classes - residual.rank();
}

}  // namespace rsc
