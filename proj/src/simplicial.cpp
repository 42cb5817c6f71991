#include "shoreline/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shoreline/error.hpp"
#include "shoreline/homology.hpp"

namespace shoreline {

namespace {

std::vector<Vertex> sorted_checked(std::vector<Vertex> vertices) {
  if (vertices.empty()) throw MalformedInput("simplex must have at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  if (vertices.front() < 0) throw MalformedInput("negative vertex id");
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    std::ostringstream os;
    os << "duplicate vertex in simplex {";
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
    os << "}";
    throw MalformedInput(os.str());
  }
  return vertices;
}

void sort_unique(std::vector<Simplex>& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(sorted_checked(std::move(vertices))) {}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  // Dropping the last vertex first yields lexicographic order.
  for (std::size_t skip = vertices_.size(); skip-- > 0;) {
    std::vector<Vertex> f;
    f.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != skip) f.push_back(vertices_[i]);
    out.push_back(Simplex(Trusted{}, std::move(f)));
  }
  return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << "]";
  return os.str();
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out;
  out.reserve(a.vertices_.size() + b.vertices_.size());
  std::set_union(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(), b.vertices_.end(),
                 std::back_inserter(out));
  return Simplex(Simplex::Trusted{}, std::move(out));
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<Simplex> sorted_unique, std::size_t n_vertices)
    : simplices_(std::move(sorted_unique)), n_vertices_(n_vertices) {
  int max_dim = simplices_.empty() ? -1 : simplices_.back().dim();
  dim_offsets_.assign(static_cast<std::size_t>(max_dim + 2), 0);
  std::size_t i = 0;
  for (int d = 0; d <= max_dim; ++d) {
    dim_offsets_[d] = i;
    while (i < simplices_.size() && simplices_[i].dim() == d) ++i;
  }
  dim_offsets_.back() = simplices_.size();
  for (const auto& s : simplices_)
    if (static_cast<std::size_t>(s.back()) >= n_vertices_)
      throw MalformedInput("vertex id " + std::to_string(s.back()) + " out of range");
}

SimplicialComplex SimplicialComplex::from_face_closed(std::vector<Simplex> simplices,
                                                      std::size_t n_vertices, bool verify) {
  sort_unique(simplices);
  SimplicialComplex k(std::move(simplices), n_vertices);
  if (verify)
    for (const auto& s : k.simplices_)
      for (const auto& f : s.facets())
        if (!k.contains(f))
          throw MalformedInput("missing face " + f.to_string() + " of " + s.to_string());
  return k;
}

std::span<const Simplex> SimplicialComplex::of_dim(int d) const {
  if (d < 0 || d > dim()) return {};
  return std::span<const Simplex>(simplices_).subspan(dim_offsets_[d],
                                                      dim_offsets_[d + 1] - dim_offsets_[d]);
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto layer = of_dim(s.dim());
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) return std::nullopt;
  return dim_offsets_[s.dim()] + static_cast<std::size_t>(it - layer.begin());
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : of_dim(0)) out.push_back(s.front());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<char> covered(simplices_.size(), 0);
  for (int d = dim(); d >= 1; --d)
    for (const auto& s : of_dim(d))
      for (const auto& f : s.facets()) covered[*index_of(f)] = 1;
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i)
    if (!covered[i]) out.push_back(simplices_[i]);
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
  return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.simplices_.begin(), other.simplices_.end(), simplices_.begin(),
                       simplices_.end());
}

bool SimplicialComplex::is_pure(int d) const {
  if (empty() || dim() != d) return false;
  std::vector<char> covered(simplices_.size(), 0);
  for (std::size_t i = dim_offsets_[d]; i < simplices_.size(); ++i) covered[i] = 1;
  for (int e = d; e >= 1; --e)
    for (std::size_t i = dim_offsets_[e]; i < dim_offsets_[e + 1]; ++i)
      if (covered[i])
        for (const auto& f : simplices_[i].facets()) covered[*index_of(f)] = 1;
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

SimplicialComplex SimplicialComplex::filter(
    const std::function<bool(const Simplex&)>& keep) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (keep(s)) out.push_back(s);
  return SimplicialComplex(std::move(out), n_vertices_);
}

SimplicialComplex SimplicialComplex::link(Vertex v) const {
  std::vector<Simplex> out;
  for (int d = 1; d <= dim(); ++d)
    for (const auto& s : of_dim(d)) {
      if (!s.contains(v)) continue;
      std::vector<Vertex> rest;
      for (Vertex w : s.vertices())
        if (w != v) rest.push_back(w);
      out.push_back(Simplex(Simplex::Trusted{}, std::move(rest)));
    }
  sort_unique(out);
  return SimplicialComplex(std::move(out), n_vertices_);
}

SimplicialComplex SimplicialComplex::with_n_vertices(std::size_t n) const {
  return SimplicialComplex(simplices_, n);
}

SimplicialComplex close_faces(std::span<const Simplex> simplices,
                              std::optional<std::size_t> n_vertices) {
  std::vector<Simplex> all;
  std::size_t n = 0;
  for (const auto& s : simplices) {
    auto vs = s.vertices();
    n = std::max(n, static_cast<std::size_t>(s.back()) + 1);
    const unsigned k = static_cast<unsigned>(vs.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<Vertex> f;
      for (unsigned i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(vs[i]);
      all.emplace_back(std::move(f));
    }
  }
  sort_unique(all);
  return SimplicialComplex(std::move(all), n_vertices.value_or(n));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> out;
  std::set_union(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(),
                 b.simplices_.end(), std::back_inserter(out));
  return SimplicialComplex(std::move(out), std::max(a.n_vertices_, b.n_vertices_));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> out;
  std::set_intersection(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(),
                        b.simplices_.end(), std::back_inserter(out));
  return SimplicialComplex(std::move(out), std::max(a.n_vertices_, b.n_vertices_));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k1.empty() || k2.empty()) throw MalformedInput("join needs two nonempty complexes");
  const auto shift = static_cast<Vertex>(k1.n_vertices());
  std::vector<Simplex> shifted;
  shifted.reserve(k2.size());
  for (const auto& t : k2.simplices()) {
    std::vector<Vertex> vs(t.vertices().begin(), t.vertices().end());
    for (auto& v : vs) v += shift;
    shifted.emplace_back(std::move(vs));
  }
  std::vector<Simplex> out(k1.simplices());
  out.insert(out.end(), shifted.begin(), shifted.end());
  for (const auto& s : k1.simplices())
    for (const auto& t : shifted) out.push_back(simplex_union(s, t));
  std::sort(out.begin(), out.end());
  return close_faces(out, k1.n_vertices() + k2.n_vertices());
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  std::vector<Simplex> flags;
  for (const auto& top : k.maximal_simplices()) {
    std::vector<Vertex> order(top.vertices().begin(), top.vertices().end());
    do {
      std::vector<Vertex> chain;
      std::vector<Vertex> prefix;
      for (Vertex v : order) {
        prefix.push_back(v);
        chain.push_back(static_cast<Vertex>(*k.index_of(Simplex(prefix))));
      }
      flags.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return {close_faces(flags, k.size()), k.simplices()};
}

ManifoldCheck check_closed_manifold(const SimplicialComplex& k, int n) {
  if (n < 0) return {false, "negative manifold dimension"};
  if (k.empty()) return {false, "empty complex"};
  if (n == 0) {
    if (k.dim() != 0) return {false, "a 0-manifold has no edges"};
    return {};
  }
  if (k.dim() != n) return {false, "dimension " + std::to_string(k.dim()) + " != " + std::to_string(n)};
  if (!k.is_pure(n)) return {false, "complex is not pure"};

  std::vector<int> cofaces(k.count(n - 1), 0);
  const std::size_t ridge_base = k.of_dim(n - 1).empty() ? 0 : *k.index_of(k.of_dim(n - 1).front());
  for (const auto& s : k.of_dim(n))
    for (const auto& f : s.facets()) ++cofaces[*k.index_of(f) - ridge_base];
  for (std::size_t i = 0; i < cofaces.size(); ++i)
    if (cofaces[i] != 2)
      return {false, "ridge " + k.of_dim(n - 1)[i].to_string() + " has " +
                         std::to_string(cofaces[i]) + " cofaces"};

  // Gather each vertex's coface list in one pass, then test its link.
  std::vector<std::vector<std::size_t>> star(k.n_vertices());
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k.simplices()[i].dim() >= 1)
      for (Vertex v : k.simplices()[i].vertices()) star[v].push_back(i);
  const BettiVector sphere = n == 1 ? BettiVector::from_dim0({2}) : [&] {
    BettiVector b = BettiVector::from_dim0({1});
    b.set(n - 1, 1);
    return b;
  }();
  for (Vertex v : k.vertices()) {
    std::vector<Simplex> link;
    for (std::size_t i : star[v]) {
      std::vector<Vertex> rest;
      for (Vertex w : k.simplices()[i].vertices())
        if (w != v) rest.push_back(w);
      link.emplace_back(std::move(rest));
    }
    auto lk = SimplicialComplex::from_face_closed(std::move(link), k.n_vertices(), false);
    if (betti(lk) != sphere)
      return {false, "link of vertex " + std::to_string(v) + " has Betti numbers " +
                         betti(lk).to_string()};
  }
  return {};
}

void Decomposition::validate() const {
  if (complex_union(u, v) != ambient) throw ConstructionError("U and V do not cover the ambient complex");
  if (complex_intersection(u, v) != m) throw ConstructionError("U and V do not intersect in M");
  if (!u.is_subcomplex_of(ambient) || !v.is_subcomplex_of(ambient) || !m.is_subcomplex_of(ambient))
    throw ConstructionError("U, V, M must be subcomplexes of the ambient complex");
  if (auto check = check_closed_manifold(m, n()); !check)
    throw ConstructionError("M is not a closed " + std::to_string(n()) + "-manifold: " + check.reason);
}

DerivedNeighborhood derived_neighborhood_detailed(const SimplicialComplex& ambient,
                                                  const SimplicialComplex& l,
                                                  int ambient_manifold_dim) {
  if (l.empty()) throw PreconditionError("derived neighborhood of an empty subcomplex");
  if (!l.is_subcomplex_of(ambient)) throw PreconditionError("l is not a subcomplex of ambient");
  if (l.size() == ambient.size()) throw PreconditionError("l must be a proper subcomplex");

  auto first = barycentric_subdivision(ambient);
  auto second = barycentric_subdivision(first.complex);

  std::vector<char> in_l(first.origin.size());
  for (std::size_t i = 0; i < first.origin.size(); ++i) in_l[i] = l.contains(first.origin[i]);
  std::vector<char> meets_l(second.origin.size());
  for (std::size_t j = 0; j < second.origin.size(); ++j) {
    const auto vs = second.origin[j].vertices();
    meets_l[j] = std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return in_l[v] != 0; });
  }

  const auto& sd2 = second.complex;
  auto u = sd2.filter([&](const Simplex& s) {
    const auto vs = s.vertices();
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return meets_l[v] != 0; });
  });
  std::vector<Simplex> outside;
  for (const auto& s : sd2.simplices())
    if (!u.contains(s)) outside.push_back(s);
  auto v = close_faces(outside, sd2.n_vertices());
  auto m = complex_intersection(u, v);

  Decomposition dec{sd2, std::move(u), std::move(v), std::move(m), ambient_manifold_dim};
  dec.validate();
  return {std::move(dec), std::move(first), std::move(second)};
}

Decomposition derived_neighborhood(const SimplicialComplex& ambient, const SimplicialComplex& l,
                                   int ambient_manifold_dim) {
  return derived_neighborhood_detailed(ambient, l, ambient_manifold_dim).decomposition;
}

SimplicialComplex boundary_of_pure_complex(const SimplicialComplex& k, int n) {
  if (!k.is_pure(n + 1))
    throw PreconditionError("boundary requires a pure " + std::to_string(n + 1) + "-complex");
  std::vector<int> cofaces(k.size(), 0);
  for (const auto& s : k.of_dim(n + 1))
    for (const auto& f : s.facets()) ++cofaces[*k.index_of(f)];
  std::vector<Simplex> bd;
  for (const auto& s : k.of_dim(n))
    if (cofaces[*k.index_of(s)] == 1) bd.push_back(s);
  return close_faces(bd, k.n_vertices());
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k) {
  std::vector<Vertex> parent(k.n_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : k.of_dim(1)) {
    const Vertex a = find(e.front()), b = find(e.back());
    parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Vertex> roots;
  for (Vertex v : k.vertices())
    if (find(v) == v) roots.push_back(v);
  std::vector<SimplicialComplex> out;
  for (Vertex r : roots)
    out.push_back(k.filter([&](const Simplex& s) { return find(s.front()) == r; }));
  return out;
}

}  // namespace shoreline

std::size_t std::hash<shoreline::Simplex>::operator()(const shoreline::Simplex& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : s.vertices()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}
