#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "rsc/gf2.hpp"

using namespace rsc;

namespace {

Gf2Matrix randomMatrix(size_t rows, size_t cols, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Gf2Matrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      if (coin(rng)) m.set(r, c);
  return m;
}

/// Rank by counting the distinct vectors in the row space.
size_t bruteRank(const Gf2Matrix& m) {
  std::vector<uint64_t> rows;
  for (size_t r = 0; r < m.rows(); ++r) {
    uint64_t v = 0;
    for (size_t c = 0; c < m.cols(); ++c) v |= uint64_t{m.get(r, c)} << c;
    rows.push_back(v);
  }
  std::vector<uint64_t> span{0};
  for (uint64_t v : rows) {
    bool inside = std::find(span.begin(), span.end(), v) != span.end();
    if (inside) continue;
    size_t size = span.size();
    for (size_t i = 0; i < size; ++i) span.push_back(span[i] ^ v);
  }
  size_t rank = 0;
  while ((size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("vector basics") {
  Gf2Vector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.firstSet() == 0);
  CHECK(v.firstSet(1) == 64);
  CHECK(v.firstSet(130) == 130);
  CHECK(v.support() == std::vector<size_t>{0, 64, 129});
  Gf2Vector w = Gf2Vector::fromSupport(130, std::vector<size_t>{64, 100});
  CHECK(v.dot(w) == true);
  v ^= w;
  CHECK(v.support() == std::vector<size_t>{0, 100, 129});
  v.flip(0);
  CHECK_FALSE(v.get(0));
}

TEST_CASE("rank agrees with a brute-force span count") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
    Gf2Matrix m = randomMatrix(rows, cols, 0.1 + 0.1 * (trial % 8), rng);
    CHECK(rank(m) == bruteRank(m));
    CHECK(rank(m.transposed()) == rank(m));
  }
}

TEST_CASE("rank-nullity and nullspace vectors") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    size_t rows = 1 + rng() % 40, cols = 1 + rng() % 150;
    Gf2Matrix m = randomMatrix(rows, cols, 0.05 + 0.05 * (trial % 6), rng);
    auto kernel = nullspaceBasis(m);
    CHECK(kernel.size() + rank(m) == cols);
    for (const Gf2Vector& x : kernel) CHECK_FALSE(m.multiply(x).any());
    Gf2Matrix stacked(kernel.size(), cols);
    for (size_t i = 0; i < kernel.size(); ++i) stacked.setRow(i, kernel[i]);
    CHECK(rank(stacked) == kernel.size());
  }
}

TEST_CASE("solveInColumnSpan returns a witness exactly when one exists") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    Gf2Matrix m = randomMatrix(rows, cols, 0.3, rng);
    Gf2Vector b(rows);
    for (size_t r = 0; r < rows; ++r)
      if (rng() & 1) b.set(r);
    auto x = solveInColumnSpan(m, b);
    Gf2Matrix augmented(rows, cols + 1);
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) augmented.set(r, c, m.get(r, c));
      augmented.set(r, cols, b.get(r));
    }
    CHECK(x.has_value() == (rank(augmented) == rank(m)));
    if (x) CHECK(m.multiply(*x) == b);
  }
}

TEST_CASE("echelon basis tracks rank and membership") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    size_t length = 1 + rng() % 100;
    Gf2Matrix m = randomMatrix(1 + rng() % 30, length, 0.1, rng);
    EchelonBasis basis(length);
    for (size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    CHECK(basis.rank() == rank(m));
    for (size_t r = 0; r < m.rows(); ++r) CHECK(basis.contains(m.row(r)));
    Gf2Vector sum(length);
    for (size_t r = 0; r < m.rows(); r += 2) sum ^= m.row(r);
    CHECK(basis.contains(sum));
  }
  EchelonBasis small(4);
  CHECK(small.insert(Gf2Vector::fromSupport(4, std::vector<size_t>{1, 2})));
  CHECK_FALSE(small.insert(Gf2Vector::fromSupport(4, std::vector<size_t>{1, 2})));
  CHECK_FALSE(small.contains(Gf2Vector::fromSupport(4, std::vector<size_t>{1})));
  CHECK_THROWS_AS(small.insert(Gf2Vector(5)), std::invalid_argument);
}

TEST_CASE("sparse nullity matches dense nullity") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    size_t vars = 2 + rng() % 60, eqs = rng() % 120;
    std::vector<uint32_t> equations;
    Gf2Matrix m(eqs + 0, vars);
    for (size_t e = 0; e < eqs; ++e)
      for (int t = 0; t < 3; ++t) {
        uint32_t v = static_cast<uint32_t>(rng() % vars);
        equations.push_back(v);
        m.flip(e, v);
      }
    std::vector<uint32_t> fixed;
    for (size_t v = 0; v < vars; ++v)
      if (rng() % 5 == 0) fixed.push_back(static_cast<uint32_t>(v));
    Gf2Matrix withFixed(eqs + fixed.size(), vars);
    for (size_t e = 0; e < eqs; ++e) withFixed.setRow(e, m.row(e));
    for (size_t i = 0; i < fixed.size(); ++i) withFixed.set(eqs + i, fixed[i]);
    CHECK(sparseNullity(vars, equations, 3, fixed) == vars - rank(withFixed));
  }
  CHECK_THROWS_AS(sparseNullity(3, std::vector<uint32_t>{0, 1}, 3, {}), std::invalid_argument);
}

TEST_CASE("matrix products and identity") {
  Gf2Matrix id = Gf2Matrix::identity(70);
  Gf2Vector x = Gf2Vector::fromSupport(70, std::vector<size_t>{3, 65});
  CHECK(id.multiply(x) == x);
  CHECK(id.transposed() == id);
  CHECK(rank(id) == 70);
  Gf2Matrix empty(0, 5);
  CHECK(rank(empty) == 0);
  CHECK(nullspaceBasis(empty).size() == 5);
}
