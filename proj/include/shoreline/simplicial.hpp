#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace shoreline {

using Vertex = std::int32_t;

/// A simplex as its strictly increasing vertex sequence. The empty simplex is
/// not representable.
class Simplex {
 public:
  /// Sorts the input. Throws MalformedInput on repeats, negative ids or an
  /// empty list.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;

  /// Codimension-one faces, in lexicographic order. Empty for a vertex.
  std::vector<Simplex> facets() const;

  /// Ordered by dimension first, then lexicographically.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
  friend bool operator==(const Simplex& a, const Simplex& b) = default;

  std::string to_string() const;

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}
  friend class SimplicialComplex;
  friend Simplex simplex_union(const Simplex&, const Simplex&);

  std::vector<Vertex> vertices_;
};

/// Vertex union of two simplices.
Simplex simplex_union(const Simplex& a, const Simplex& b);

/// A face-closed set of simplices over vertex ids [0, n_vertices). Immutable;
/// simplices are stored sorted by (dimension, lexicographic).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds from a set that is already face-closed. With verify, throws
  /// MalformedInput when a facet is missing; duplicates are removed.
  static SimplicialComplex from_face_closed(std::vector<Simplex> simplices,
                                            std::size_t n_vertices, bool verify = true);

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  int dim() const { return static_cast<int>(dim_offsets_.size()) - 2; }
  std::size_t n_vertices() const { return n_vertices_; }

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::span<const Simplex> of_dim(int d) const;
  std::size_t count(int d) const { return of_dim(d).size(); }

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Vertex ids that appear as 0-simplices, ascending.
  std::vector<Vertex> vertices() const;
  std::vector<Simplex> maximal_simplices() const;
  long long euler_characteristic() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool is_pure(int d) const;

  /// Keeps the simplices satisfying `keep`. The predicate must be inherited by
  /// faces (true on a simplex implies true on all of its faces).
  SimplicialComplex filter(const std::function<bool(const Simplex&)>& keep) const;

  /// Link of a vertex; vertex ids are kept.
  SimplicialComplex link(Vertex v) const;

  /// Same simplices, larger vertex id range.
  SimplicialComplex with_n_vertices(std::size_t n) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

  friend SimplicialComplex close_faces(std::span<const Simplex>, std::optional<std::size_t>);
  friend SimplicialComplex complex_union(const SimplicialComplex&, const SimplicialComplex&);
  friend SimplicialComplex complex_intersection(const SimplicialComplex&,
                                                const SimplicialComplex&);

 private:
  SimplicialComplex(std::vector<Simplex> sorted_unique, std::size_t n_vertices);

  std::vector<Simplex> simplices_;
  // dim_offsets_[d] is the first index of dimension d; one sentinel at the end.
  std::vector<std::size_t> dim_offsets_;
  std::size_t n_vertices_ = 0;
};

/// Smallest face-closed complex containing the input. n_vertices defaults to
/// one past the largest id seen.
SimplicialComplex close_faces(std::span<const Simplex> simplices,
                              std::optional<std::size_t> n_vertices = std::nullopt);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Join with the vertices of k2 shifted by k1.n_vertices().
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

struct Subdivision {
  SimplicialComplex complex;
  // New vertex i is the barycenter of origin[i] (indexes the old simplices).
  std::vector<Simplex> origin;
};

/// First barycentric subdivision. New vertex i is the barycenter of the i-th
/// simplex of k in storage order.
Subdivision barycentric_subdivision(const SimplicialComplex& k);

struct ManifoldCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Pure of dimension n, every ridge in exactly two facets, every vertex link a
/// homology (n-1)-sphere. For n = 0 any nonempty vertex set passes.
ManifoldCheck check_closed_manifold(const SimplicialComplex& k, int n);
inline bool is_closed_manifold(const SimplicialComplex& k, int n) {
  return check_closed_manifold(k, n).ok;
}

/// The triple (U, V, M) over a common ambient complex.
struct Decomposition {
  SimplicialComplex ambient;
  SimplicialComplex u;
  SimplicialComplex v;
  SimplicialComplex m;
  int ambient_manifold_dim = 0;

  int n() const { return ambient_manifold_dim - 1; }
  /// Throws ConstructionError naming the first broken invariant.
  void validate() const;
};

struct DerivedNeighborhood {
  Decomposition decomposition;
  Subdivision first;
  Subdivision second;
};

/// Closed star of l in the second barycentric subdivision of ambient, its
/// complement closure, and their common frontier.
DerivedNeighborhood derived_neighborhood_detailed(const SimplicialComplex& ambient,
                                                  const SimplicialComplex& l,
                                                  int ambient_manifold_dim);
Decomposition derived_neighborhood(const SimplicialComplex& ambient, const SimplicialComplex& l,
                                   int ambient_manifold_dim);

/// Connected components, ordered by their smallest vertex.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k);

/// Closure of the n-simplices with exactly one (n+1)-coface.
SimplicialComplex boundary_of_pure_complex(const SimplicialComplex& k, int n);

}  // namespace shoreline

template <>
struct std::hash<shoreline::Simplex> {
  std::size_t operator()(const shoreline::Simplex& s) const noexcept;
};
