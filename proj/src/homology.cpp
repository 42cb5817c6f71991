#include "shoreline/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>

#include "shoreline/error.hpp"
#include "shoreline/filtration.hpp"

namespace shoreline {

BettiVector::BettiVector(std::vector<std::size_t> ranks_from_minus_one)
    : ranks_(std::move(ranks_from_minus_one)) {}

BettiVector BettiVector::from_dim0(std::vector<std::size_t> ranks) {
  ranks.insert(ranks.begin(), 0);
  return BettiVector(std::move(ranks));
}

std::size_t BettiVector::operator[](int p) const {
  const auto i = static_cast<std::size_t>(p + 1);
  if (p < -1 || i >= ranks_.size()) return 0;
  return ranks_[i];
}

void BettiVector::set(int p, std::size_t rank) {
  if (p < -1) throw MalformedInput("Betti dimension below -1");
  const auto i = static_cast<std::size_t>(p + 1);
  if (i >= ranks_.size()) ranks_.resize(i + 1, 0);
  ranks_[i] = rank;
}

int BettiVector::max_dim() const {
  for (std::size_t i = ranks_.size(); i-- > 0;)
    if (ranks_[i] != 0) return static_cast<int>(i) - 1;
  return -2;
}

bool operator==(const BettiVector& a, const BettiVector& b) {
  const int top = std::max(a.max_dim(), b.max_dim());
  for (int p = -1; p <= top; ++p)
    if (a[p] != b[p]) return false;
  return true;
}

std::string BettiVector::to_string() const {
  std::ostringstream os;
  os << "(";
  const int top = std::max(max_dim(), 0);
  if ((*this)[-1] != 0) os << "[-1]=" << (*this)[-1] << "; ";
  for (int p = 0; p <= top; ++p) os << (p ? "," : "") << (*this)[p];
  os << ")";
  return os.str();
}

namespace {

class BitColumn {
 public:
  explicit BitColumn(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void add(const BitColumn& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }
  // Highest set bit, or -1 for the zero column.
  long long highest() const {
    for (std::size_t w = words_.size(); w-- > 0;)
      if (words_[w]) return static_cast<long long>(w * 64 + 63 - std::countl_zero(words_[w]));
    return -1;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::size_t dense_rank(std::size_t n_rows, const std::vector<std::vector<std::size_t>>& columns) {
  if (n_rows == 0) return 0;
  std::vector<std::optional<BitColumn>> pivot(n_rows);
  std::size_t rank = 0;
  for (const auto& entries : columns) {
    BitColumn col(n_rows);
    for (std::size_t r : entries) col.flip(r);
    for (long long h = col.highest(); h >= 0; h = col.highest()) {
      auto& slot = pivot[static_cast<std::size_t>(h)];
      if (!slot) {
        slot = std::move(col);
        ++rank;
        break;
      }
      col.add(*slot);
    }
  }
  return rank;
}

std::size_t boundary_rank(const SimplicialComplex& k, int p) {
  const auto rows = k.of_dim(p - 1);
  const auto cols = k.of_dim(p);
  if (rows.empty() || cols.empty()) return 0;
  const std::size_t row_base = *k.index_of(rows.front());
  std::vector<std::vector<std::size_t>> columns;
  columns.reserve(cols.size());
  for (const auto& s : cols) {
    auto& c = columns.emplace_back();
    for (const auto& f : s.facets()) c.push_back(*k.index_of(f) - row_base);
  }
  return dense_rank(rows.size(), columns);
}

}  // namespace

std::vector<std::size_t> boundary_ranks(const SimplicialComplex& k) {
  // ranks[p] = rank of the boundary map from p-chains; ranks[0] = 0.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(k.dim(), 0) + 2), 0);
  for (int p = 1; p <= k.dim(); ++p) ranks[p] = boundary_rank(k, p);
  return ranks;
}

BettiVector betti(const SimplicialComplex& k) {
  BettiVector out;
  if (k.empty()) return out;
  const auto ranks = boundary_ranks(k);
  for (int p = 0; p <= k.dim(); ++p)
    out.set(p, k.count(p) - ranks[p] - ranks[p + 1]);
  return out;
}

BettiVector reduced_betti(const SimplicialComplex& k) {
  BettiVector out = betti(k);
  if (k.empty()) {
    out.set(-1, 1);
  } else {
    out.set(0, out[0] - 1);
  }
  return out;
}

BettiVector relative_betti(const SimplicialComplex& k, const SimplicialComplex& sub) {
  if (!sub.is_subcomplex_of(k)) throw PreconditionError("relative_betti: not a subcomplex");
  const auto apex = static_cast<Vertex>(k.n_vertices());
  std::vector<Simplex> coned(k.simplices());
  coned.push_back(Simplex{apex});
  for (const auto& s : sub.simplices()) {
    std::vector<Vertex> vs(s.vertices().begin(), s.vertices().end());
    vs.push_back(apex);
    coned.emplace_back(std::move(vs));
  }
  return reduced_betti(SimplicialComplex::from_face_closed(std::move(coned), k.n_vertices() + 1, false));
}

SubcomplexHomology::SubcomplexHomology(const SimplicialComplex& k) : k_(k) {
  const std::size_t n = k.size();
  dim_.resize(n);
  std::vector<std::size_t> cofacet_count(n, 0);
  facet_start_.assign(1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = k.simplices()[i];
    dim_[i] = s.dim();
    if (s.dim() > 0)
      for (const auto& f : s.facets()) {
        const std::size_t j = *k.index_of(f);
        facet_.push_back(j);
        ++cofacet_count[j];
      }
    facet_start_.push_back(facet_.size());
  }
  cofacet_start_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) cofacet_start_[i + 1] = cofacet_start_[i] + cofacet_count[i];
  cofacet_.resize(cofacet_start_.back());
  std::vector<std::size_t> fill(cofacet_start_.begin(), cofacet_start_.end() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t e = facet_start_[i]; e < facet_start_[i + 1]; ++e) cofacet_[fill[facet_[e]]++] = i;
}

BettiVector SubcomplexHomology::betti(const std::vector<char>& keep) const {
  if (keep.size() != k_.size()) throw PreconditionError("selection size does not match the complex");
  return run(keep, true);
}

BettiVector SubcomplexHomology::relative_betti(const std::vector<char>& sub) const {
  if (sub.size() != k_.size()) throw PreconditionError("selection size does not match the complex");
  if (std::find(sub.begin(), sub.end(), 1) == sub.end()) return betti(std::vector<char>(k_.size(), 1));
  // Chains of the complex modulo chains of sub.
  std::vector<char> alive(k_.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = !sub[i];
  return run(std::move(alive), false);
}

BettiVector SubcomplexHomology::sublevel_betti(const VertexFunction& f, double t) const {
  std::vector<char> keep(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) keep[i] = max_value(k_.simplices()[i], f) <= t;
  return betti(keep);
}

BettiVector SubcomplexHomology::superlevel_relative_betti(const VertexFunction& f, double t) const {
  std::vector<char> sub(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) sub[i] = min_value(k_.simplices()[i], f) >= t;
  return relative_betti(sub);
}

BettiVector SubcomplexHomology::run(std::vector<char> alive, bool face_closed) const {
  const std::size_t total = dim_.size();
  // Live facet and cofacet counts. Cells leave only in pairs that keep the
  // homology, plus one vertex per component when the selection is a complex.
  std::vector<std::uint32_t> n_facets(total, 0), n_cofacets(total, 0);
  for (std::size_t i = 0; i < total; ++i)
    if (alive[i])
      for (std::size_t e = facet_start_[i]; e < facet_start_[i + 1]; ++e)
        if (alive[facet_[e]]) {
          ++n_cofacets[facet_[e]];
          ++n_facets[i];
        }

  std::vector<std::size_t> free_faces, single_facet;
  auto remove = [&](std::size_t i) {
    alive[i] = 0;
    for (std::size_t e = facet_start_[i]; e < facet_start_[i + 1]; ++e) {
      const std::size_t j = facet_[e];
      if (!alive[j]) continue;
      if (--n_cofacets[j] == 1) {
        free_faces.push_back(j);
      } else if (n_cofacets[j] == 0) {
        for (std::size_t g = facet_start_[j]; g < facet_start_[j + 1]; ++g)
          if (alive[facet_[g]] && n_cofacets[facet_[g]] == 1) free_faces.push_back(facet_[g]);
      }
    }
    for (std::size_t e = cofacet_start_[i]; e < cofacet_start_[i + 1]; ++e) {
      const std::size_t c = cofacet_[e];
      if (alive[c] && --n_facets[c] == 1) single_facet.push_back(c);
    }
  };
  auto live = [&](std::size_t i, const std::vector<std::size_t>& start,
                  const std::vector<std::size_t>& list) {
    for (std::size_t e = start[i]; e < start[i + 1]; ++e)
      if (alive[list[e]]) return list[e];
    return total;
  };
  // A free face with a maximal partner.
  auto collapse = [&]() {
    bool any = false;
    while (!free_faces.empty()) {
      const std::size_t s = free_faces.back();
      free_faces.pop_back();
      if (!alive[s] || n_cofacets[s] != 1) continue;
      const std::size_t t = live(s, cofacet_start_, cofacet_);
      if (n_cofacets[t] != 0) continue;
      remove(t);
      remove(s);
      any = true;
    }
    return any;
  };
  // A cell whose boundary is a single live cell.
  auto coreduce = [&]() {
    bool any = false;
    while (!single_facet.empty()) {
      const std::size_t c = single_facet.back();
      single_facet.pop_back();
      if (!alive[c] || n_facets[c] != 1) continue;
      const std::size_t a = live(c, facet_start_, facet_);
      remove(c);
      remove(a);
      any = true;
    }
    return any;
  };

  for (std::size_t i = 0; i < total; ++i) {
    if (!alive[i]) continue;
    if (n_cofacets[i] == 1) free_faces.push_back(i);
    if (dim_[i] > 0 && n_facets[i] == 1) single_facet.push_back(i);
  }
  std::size_t components = 0;
  if (face_closed) {
    collapse();
    // Still a simplicial complex, so each vertex is a nonzero class in degree
    // zero; dropping one per component lowers only that Betti number.
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < total; ++i)
      if (alive[i] && dim_[i] == 1)
        parent[find(facet_[facet_start_[i]])] = find(facet_[facet_start_[i] + 1]);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < total; ++i)
      if (alive[i] && dim_[i] == 0 && find(i) == i) roots.push_back(i);
    for (std::size_t r : roots) remove(r);
    components = roots.size();
  }
  while (coreduce() | collapse()) {
  }

  int top = -1;
  for (std::size_t i = 0; i < total; ++i)
    if (alive[i]) top = std::max(top, dim_[i]);
  BettiVector out;
  out.set(0, components);
  if (top < 0) return out;
  std::vector<std::size_t> local(total, 0), n_cells(static_cast<std::size_t>(top) + 2, 0);
  for (std::size_t i = 0; i < total; ++i)
    if (alive[i]) local[i] = n_cells[static_cast<std::size_t>(dim_[i])]++;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int p = 1; p <= top; ++p) {
    std::vector<std::vector<std::size_t>> columns;
    for (std::size_t i = 0; i < total; ++i) {
      if (!alive[i] || dim_[i] != p) continue;
      auto& c = columns.emplace_back();
      for (std::size_t e = facet_start_[i]; e < facet_start_[i + 1]; ++e)
        if (alive[facet_[e]]) c.push_back(local[facet_[e]]);
    }
    ranks[static_cast<std::size_t>(p)] = dense_rank(n_cells[static_cast<std::size_t>(p) - 1], columns);
  }
  for (int p = 0; p <= top; ++p) {
    const auto up = static_cast<std::size_t>(p);
    out.set(p, out[p] + n_cells[up] - ranks[up] - ranks[up + 1]);
  }
  return out;
}

}  // namespace shoreline
