#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shoreline/filtration.hpp"
#include "shoreline/simplicial.hpp"

namespace shoreline {

enum class Subdiagram { Ordinary, Horizontal, Vertical, Relative };

struct Endpoint {
  double value = 0.0;
  Pass pass = Pass::Ascending;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Dot {
  int dim = 0;
  Endpoint birth;
  Endpoint death;
  Subdiagram subdiagram = Subdiagram::Ordinary;

  /// Classifies from the passes and values. Throws MalformedInput for a dot
  /// born on the way down and dying on the way up, or a dim below -1.
  static Dot make(int dim, Endpoint birth, Endpoint death);

  /// Both ends in the same pass with the same value.
  bool is_diagonal() const { return birth == death; }
  std::string to_string() const;

  friend bool operator==(const Dot&, const Dot&) = default;
};

/// (dim, birth pass, birth value, death pass, death value).
bool canonical_less(const Dot& a, const Dot& b);

const char* pass_name(Pass p);
const char* subdiagram_name(Subdiagram s);
Pass parse_pass(const std::string& s);
Subdiagram parse_subdiagram(const std::string& s);

struct PersistenceDiagram {
  std::vector<Dot> dots;
  std::string source;
  std::optional<int> n;

  void canonicalize();
  PersistenceDiagram of_dim(int p) const;
  PersistenceDiagram without_diagonal() const;
  std::size_t size() const { return dots.size(); }
};

enum class Strategy {
  Standard,  // left to right
  Twist,     // dimensions high to low, clearing
  Shuffled,  // dimensions in a seeded random order, clearing where possible
};

struct ReductionOptions {
  Strategy strategy = Strategy::Twist;
  std::uint64_t seed = 0;
};

/// Extended persistence of f on k. Diagonal dots are kept; the result is in
/// canonical order.
PersistenceDiagram compute_diagram(const SimplicialComplex& k, const VertexFunction& f,
                                   ReductionOptions options = {}, std::string source = "");

enum class Part { U, V, M, S };
const char* part_name(Part p);
Part parse_part(const std::string& s);
const SimplicialComplex& part_of(const Decomposition& dec, Part which);

PersistenceDiagram restrict_and_compute(const Decomposition& dec, const VertexFunction& f,
                                        Part which, ReductionOptions options = {});

enum class Side { L, R };

/// Dots of dimension p alive in the sublevel set at t (L) or in the pair of
/// the space and its superlevel set at t (R). Throws PreconditionError if t
/// coincides with a coordinate of some dot.
std::size_t rectangle_count(const PersistenceDiagram& dgm, double t, int p, Side side);

}  // namespace shoreline
