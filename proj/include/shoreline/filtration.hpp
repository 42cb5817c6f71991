#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shoreline/simplicial.hpp"

namespace shoreline {

/// Function values indexed by vertex id, extended piecewise-linearly.
class VertexFunction {
 public:
  VertexFunction() = default;
  /// Throws MalformedInput on non-finite values.
  explicit VertexFunction(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](Vertex v) const { return values_.at(static_cast<std::size_t>(v)); }
  const std::vector<double>& values() const { return values_; }

  double min() const;
  double max() const;
  /// True when all values are pairwise distinct.
  bool is_generic() const;

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::vector<double> values_;
};

/// Affine rescale onto [0, 1]. Throws PreconditionError on a constant function.
VertexFunction normalize(const VertexFunction& f);

/// Adds i * scale to vertex i and renormalizes. The default scale is 2^-30 of
/// the value range. Throws GenericityError if the result has ties or if the
/// order of some strictly ordered pair flipped.
VertexFunction perturb(const VertexFunction& f, std::optional<double> tie_break_scale = std::nullopt);

/// Throws GenericityError if two vertices of k share a value, and
/// MalformedInput if f does not cover k.
void require_generic(const SimplicialComplex& k, const VertexFunction& f);

double max_value(const Simplex& s, const VertexFunction& f);
double min_value(const Simplex& s, const VertexFunction& f);

/// Simplices whose largest vertex value is at most t.
SimplicialComplex sublevel_complex(const SimplicialComplex& k, const VertexFunction& f, double t);
/// Simplices whose smallest vertex value is at least t.
SimplicialComplex superlevel_complex(const SimplicialComplex& k, const VertexFunction& f, double t);

struct CriticalSequence {
  std::vector<double> critical_values;
  std::vector<double> regular_values;  // midpoints, one fewer
};

/// Every vertex value counts as critical.
CriticalSequence critical_sequence(const SimplicialComplex& k, const VertexFunction& f);

enum class Pass { Ascending, Descending };

struct Cell {
  Pass pass = Pass::Ascending;
  // The simplex itself on the way up, the coned simplex on the way down. The
  // apex has none.
  std::optional<Simplex> base;
  double value = 0.0;
  int dim = 0;

  bool is_apex() const { return !base.has_value(); }
  std::string to_string() const;
};

struct ExtendedFiltration {
  std::vector<Cell> cells;
  // Boundary of each cell as sorted indices into cells.
  std::vector<std::vector<std::size_t>> boundaries;
  std::size_t apex = 0;
  std::size_t n_ascending() const { return apex; }
};

/// Ascending simplices by (max value, dim, lex), then the apex, then the cone
/// cells by (-min value, dim, lex). Throws GenericityError on ties.
ExtendedFiltration extended_filtration(const SimplicialComplex& k, const VertexFunction& f);

struct MorseCheck {
  bool ok = false;
  std::vector<Vertex> minima;
  std::vector<Vertex> maxima;
  std::vector<Vertex> irregular;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Link of v restricted to vertices below (or above) f(v).
SimplicialComplex lower_link(const SimplicialComplex& s, const VertexFunction& f, Vertex v);
SimplicialComplex upper_link(const SimplicialComplex& s, const VertexFunction& f, Vertex v);

/// One vertex with empty lower link, one with empty upper link, and an acyclic
/// lower link everywhere else. Fails (with a reason) if s is not a closed
/// manifold of dimension n_plus_1.
MorseCheck check_pl_perfect_morse(const SimplicialComplex& s, const VertexFunction& f,
                                  int n_plus_1);
inline bool is_pl_perfect_morse(const SimplicialComplex& s, const VertexFunction& f, int n_plus_1) {
  return check_pl_perfect_morse(s, f, n_plus_1).ok;
}

}  // namespace shoreline
