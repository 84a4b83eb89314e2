#pragma once

#include <vector>

#include "rsc/simplex.hpp"

namespace rsc {

/// The j-flower F(K, C) in a k-simplex K: its petals are C + {w} for each
/// vertex w of K outside the centre C (|C| = j), so there are k - j + 1.
struct Flower {
  Simplex top;
  Simplex centre;

  int j() const { return centre.size(); }
  std::vector<Simplex> petals() const;
  Simplex petalAt(Vertex w) const { return centre.with(w); }

  friend bool operator==(const Flower&, const Flower&) = default;
};

/// (K, C) such that every petal of F(K, C) lies in no k-simplex other than K.
struct MjMinusCopy {
  Flower flower;
  friend bool operator==(const MjMinusCopy&, const MjMinusCopy&) = default;
};

}  // namespace rsc
