#include "rsc/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rsc {

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const Vertex> vertices) {
  if (vertices.size() > static_cast<size_t>(kMaxSize))
    throw std::invalid_argument("simplex has more than 16 vertices");
  std::copy(vertices.begin(), vertices.end(), vertices_.begin());
  size_ = static_cast<uint8_t>(vertices.size());
  std::sort(vertices_.begin(), vertices_.begin() + size_);
  for (int i = 0; i < size_; ++i) {
    if (vertices_[i] < 0) throw std::invalid_argument("negative vertex id");
    if (i > 0 && vertices_[i] == vertices_[i - 1])
      throw std::invalid_argument("duplicate vertex in simplex");
  }
}

Simplex Simplex::fromRank(SimplexRank rank, int size) {
  Simplex s;
  s.size_ = static_cast<uint8_t>(size);
  colexUnrank(rank, size, std::span<Vertex>(s.vertices_.data(), size));
  return s;
}

bool Simplex::contains(Vertex v) const { return std::binary_search(begin(), end(), v); }

bool Simplex::isSubsetOf(const Simplex& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

Simplex Simplex::with(Vertex v) const {
  if (contains(v)) return *this;
  if (size_ == kMaxSize) throw std::invalid_argument("simplex has more than 16 vertices");
  Simplex s = *this;
  auto* pos = std::upper_bound(s.vertices_.begin(), s.vertices_.begin() + size_, v);
  std::copy_backward(pos, s.vertices_.begin() + size_, s.vertices_.begin() + size_ + 1);
  *pos = v;
  ++s.size_;
  return s;
}

Simplex Simplex::without(Vertex v) const {
  Simplex s;
  for (Vertex u : *this)
    if (u != v) s.vertices_[s.size_++] = u;
  return s;
}

std::string Simplex::toString(int offset) const {
  std::ostringstream out;
  for (int i = 0; i < size_; ++i) {
    if (i) out << ' ';
    out << vertices_[i] + offset;
  }
  return out.str();
}

bool colexLess(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = a.size() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Simplex setUnion(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Simplex(out);
}

Simplex setDifference(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Simplex(out);
}

std::vector<Simplex> allSubsetsOfSize(const Simplex& s, int size) {
  std::vector<Simplex> out;
  forEachSubset(s, size, [&](const Simplex& t) { out.push_back(t); });
  return out;
}

}  // namespace rsc
