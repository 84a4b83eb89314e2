#include "rsc/complex.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rsc {

std::string toString(Model model) { return model == Model::G ? "g" : "y"; }

Model parseModel(const std::string& text) {
  if (text == "g" || text == "G") return Model::G;
  if (text == "y" || text == "Y") return Model::Y;
  throw std::invalid_argument("unknown model '" + text + "' (expected g or y)");
}

SimplexIndex::SimplexIndex(int dimension, std::vector<SimplexRank> sortedRanks)
    : dimension_(dimension), ranks_(std::move(sortedRanks)) {}

std::optional<size_t> SimplexIndex::indexOfRank(SimplexRank rank) const {
  auto it = std::lower_bound(ranks_.begin(), ranks_.end(), rank);
  if (it == ranks_.end() || *it != rank) return std::nullopt;
  return static_cast<size_t>(it - ranks_.begin());
}

std::optional<size_t> SimplexIndex::indexOf(const Simplex& s) const {
  if (s.dimension() != dimension_) return std::nullopt;
  return indexOfRank(s.rank());
}

struct Complex::Impl {
  int n = 0;
  int k = 0;
  Model model = Model::G;
  std::vector<Simplex> hyperedges;
  std::vector<Simplex> extras;
  std::vector<Simplex> tops;

  mutable std::array<std::once_flag, Simplex::kMaxSize> indexOnce;
  mutable std::array<std::unique_ptr<SimplexIndex>, Simplex::kMaxSize> index;
  mutable std::array<std::once_flag, Simplex::kMaxSize> degreeOnce;
  mutable std::array<std::vector<uint32_t>, Simplex::kMaxSize> degrees;

  void buildIndex(int d) const {
    std::vector<SimplexRank> ranks;
    if (d == 0 || (model == Model::Y && d < k)) {
      uint64_t total = binomial(n, d + 1);
      ranks.resize(total);
      for (uint64_t r = 0; r < total; ++r) ranks[r] = r;
    } else if (d == k) {
      ranks.reserve(tops.size());
      for (const Simplex& s : tops) ranks.push_back(s.rank());
    } else {
      ranks.reserve(hyperedges.size() * binomial(k + 1, d + 1));
      for (const Simplex& s : hyperedges)
        forEachSubset(s, d + 1, [&](const Simplex& f) { ranks.push_back(f.rank()); });
      for (const Simplex& s : extras)
        forEachSubset(s, d + 1, [&](const Simplex& f) { ranks.push_back(f.rank()); });
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    index[d] = std::make_unique<SimplexIndex>(d, std::move(ranks));
  }

  const SimplexIndex& simplexIndex(int d) const {
    std::call_once(indexOnce[d], [&] { buildIndex(d); });
    return *index[d];
  }

  const std::vector<uint32_t>& degreeTable(int d) const {
    std::call_once(degreeOnce[d], [&] {
      const SimplexIndex& idx = simplexIndex(d);
      std::vector<uint32_t> deg(idx.size(), 0);
      for (const Simplex& top : tops)
        forEachSubset(top, d + 1, [&](const Simplex& f) { ++deg[*idx.indexOfRank(f.rank())]; });
      degrees[d] = std::move(deg);
    });
    return degrees[d];
  }
};

namespace {

void validateSet(const Simplex& s, int n) {
  for (Vertex v : s)
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, n)");
}

void sortUnique(std::vector<Simplex>& v) {
  std::sort(v.begin(), v.end(), colexLess);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Complex makeComplex(int n, int k, Model model, std::vector<Simplex> hyperedges,
                    std::vector<Simplex> extras) {
  if (k < 2) throw std::invalid_argument("dimension k must be at least 2");
  if (k + 1 > Simplex::kMaxSize) throw std::invalid_argument("dimension k too large");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxBinomialN) throw std::invalid_argument("n too large");
  if (binomial(n, k + 1) > (uint64_t{1} << 31))
    throw std::invalid_argument("C(n, k+1) exceeds 2^31");
  for (const Simplex& s : hyperedges) {
    if (s.size() != k + 1) throw std::invalid_argument("hyperedge must have exactly k+1 vertices");
    validateSet(s, n);
  }
  for (const Simplex& s : extras) {
    if (s.empty() || s.size() > k + 1) throw std::invalid_argument("added simplex must have 1..k+1 vertices");
    validateSet(s, n);
  }
  auto impl = std::make_shared<Complex::Impl>();
  impl->n = n;
  impl->k = k;
  impl->model = model;
  sortUnique(hyperedges);
  sortUnique(extras);
  impl->tops = hyperedges;
  for (const Simplex& s : extras)
    if (s.size() == k + 1) impl->tops.push_back(s);
  sortUnique(impl->tops);
  impl->hyperedges = std::move(hyperedges);
  impl->extras = std::move(extras);
  return Complex(std::move(impl));
}

int Complex::n() const { return impl_->n; }
int Complex::k() const { return impl_->k; }
Model Complex::model() const { return impl_->model; }
std::span<const Simplex> Complex::hyperedges() const { return impl_->hyperedges; }
std::span<const Simplex> Complex::extraSimplices() const { return impl_->extras; }
std::span<const Simplex> Complex::topSimplices() const { return impl_->tops; }

const SimplexIndex& Complex::simplices(int d) const {
  if (d < 0 || d > impl_->k) throw std::out_of_range("dimension outside [0, k]");
  return impl_->simplexIndex(d);
}

bool Complex::contains(const Simplex& s) const {
  if (s.empty() || s.size() > impl_->k + 1 || s.maxVertex() >= impl_->n) return false;
  return simplices(s.dimension()).indexOf(s).has_value();
}

std::span<const uint32_t> Complex::kDegrees(int d) const {
  if (d < 0 || d > impl_->k) throw std::out_of_range("dimension outside [0, k]");
  return impl_->degreeTable(d);
}

uint32_t Complex::coveringDegree(const Simplex& s) const {
  if (s.empty() || s.size() > impl_->k + 1 || s.maxVertex() >= impl_->n) return 0;
  auto i = simplices(s.dimension()).indexOf(s);
  return i ? kDegrees(s.dimension())[*i] : 0;
}

Complex buildG(int n, int k, std::vector<Simplex> hyperedges) {
  return makeComplex(n, k, Model::G, std::move(hyperedges), {});
}

Complex buildY(int n, int k, std::vector<Simplex> hyperedges) {
  return makeComplex(n, k, Model::Y, std::move(hyperedges), {});
}

Complex build(Model model, int n, int k, std::vector<Simplex> hyperedges) {
  return makeComplex(n, k, model, std::move(hyperedges), {});
}

Complex addSimplex(const Complex& c, const Simplex& b) {
  if (b.empty()) throw std::invalid_argument("added simplex must be nonempty");
  if (b.size() > c.k() + 1) throw std::invalid_argument("added simplex exceeds dimension k");
  if (b.maxVertex() >= c.n()) throw std::invalid_argument("added simplex has a vertex outside [0, n)");
  if (c.contains(b)) return c;
  std::vector<Simplex> hyperedges(c.hyperedges().begin(), c.hyperedges().end());
  std::vector<Simplex> extras(c.extraSimplices().begin(), c.extraSimplices().end());
  extras.push_back(b);
  return makeComplex(c.n(), c.k(), c.model(), std::move(hyperedges), std::move(extras));
}

uint32_t kDegree(const Complex& c, const Simplex& s) {
  if (!c.contains(s)) throw std::invalid_argument("kDegree: {" + s.toString() + "} is not a simplex");
  return c.coveringDegree(s);
}

std::vector<Simplex> simplexList(const Complex& c, int d) {
  const SimplexIndex& idx = c.simplices(d);
  std::vector<Simplex> out;
  out.reserve(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) out.push_back(idx.simplexAt(i));
  return out;
}

Complex readComplex(std::istream& in) {
  std::string line;
  auto nextLine = [&]() -> bool {
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!nextLine()) throw std::invalid_argument("complex file: missing header");
  std::istringstream header(line);
  int n = 0, k = 0;
  std::string model;
  if (!(header >> n >> k >> model)) throw std::invalid_argument("complex file: header must be `n k model`");
  std::vector<Simplex> edges;
  while (nextLine()) {
    std::istringstream row(line);
    std::vector<Vertex> vs;
    long v = 0;
    while (row >> v) {
      if (v < 1 || v > n) throw std::invalid_argument("complex file: vertex out of range in '" + line + "'");
      vs.push_back(static_cast<Vertex>(v - 1));
    }
    if (!row.eof()) throw std::invalid_argument("complex file: malformed line '" + line + "'");
    edges.emplace_back(vs);
  }
  return build(parseModel(model), n, k, std::move(edges));
}

Complex readComplexFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open complex file " + path);
  return readComplex(in);
}

void writeComplex(std::ostream& out, const Complex& c) {
  out << c.n() << ' ' << c.k() << ' ' << toString(c.model()) << '\n';
  for (const Simplex& s : c.hyperedges()) out << s.toString(1) << '\n';
}

}  // namespace rsc
